from fractions import Fraction

import pytest
import sympy

from core.polynomial import LaurentPoly

q = LaurentPoly.monomial(1)


def test_rendering():
    p = LaurentPoly.from_dict({-2: 1, 0: 1, 2: 1, 4: 1})
    assert str(p) == "q^-2 + 1 + q^2 + q^4"
    assert str(LaurentPoly.from_dict({1: -2, 3: 1})) == "-2q + q^3"
    assert str(LaurentPoly.zero()) == "0"


def test_arithmetic():
    p = (q + 1) * (q - 1)
    assert p == LaurentPoly.from_dict({2: 1, 0: -1})
    assert (q ** -1) * q == LaurentPoly.constant(1)
    assert (p - p).is_zero()


def test_shift_and_substitution():
    p = LaurentPoly.from_dict({-1: 1, 1: 1})
    assert p.shift(2) == LaurentPoly.from_dict({1: 1, 3: 1})
    assert p.substitute_power(-2) == LaurentPoly.from_dict({-2: 1, 2: 1})
    assert (p.min_degree, p.max_degree) == (-1, 1)


def test_evaluate_is_exact():
    p = LaurentPoly.from_dict({-1: 1, 1: 1})
    assert p.evaluate(1) == 2
    assert p.evaluate(2) == Fraction(5, 2)


def test_sympy_expression():
    p = LaurentPoly.from_dict({-1: 1, 2: 3})
    x = sympy.Symbol("q")
    assert sympy.simplify(p.as_expr() - (1 / x + 3 * x ** 2)) == 0


def test_mixed_variables_are_rejected():
    a = LaurentPoly.monomial(1, var="A")
    with pytest.raises(ValueError):
        q + a
    with pytest.raises(ValueError):
        q * a
    assert (a + 1).var == "A"
