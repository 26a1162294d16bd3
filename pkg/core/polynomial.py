"""
Exact Laurent polynomials in one variable (q or A) with integer coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy

Number = Union[int, Fraction]


@dataclass(frozen=True)
class LaurentPoly:
    terms: Tuple[Tuple[int, int], ...] = ()
    var: str = "q"

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, int], var: str = "q") -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in coefficients.items() if c != 0)), var)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "q") -> "LaurentPoly":
        return cls.from_dict({exponent: coefficient}, var)

    @classmethod
    def constant(cls, value: int, var: str = "q") -> "LaurentPoly":
        return cls.from_dict({0: value}, var)

    @classmethod
    def zero(cls, var: str = "q") -> "LaurentPoly":
        return cls((), var)

    @classmethod
    def sum_of(cls, polys: Iterable["LaurentPoly"], var: str = "q") -> "LaurentPoly":
        acc: Dict[int, int] = {}
        for p in polys:
            for e, c in p.terms:
                acc[e] = acc.get(e, 0) + c
        return cls.from_dict(acc, var)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"cannot combine polynomials in {self.var} and {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly.sum_of((self, other), self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.var)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self.terms
            return LaurentPoly.monomial(e * n, c ** -n, self.var)
        result = LaurentPoly.constant(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms), self.var)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace var by var^k."""
        return LaurentPoly.from_dict({e * k: c for e, c in self.terms}, self.var)

    def evaluate(self, x: Number) -> Number:
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def as_expr(self) -> sympy.Expr:
        symbol = sympy.Symbol(self.var)
        return sympy.Add(*(c * symbol ** e for e, c in self.terms))

    @property
    def min_degree(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def _monomial_text(self, e: int, c: int) -> str:
        body = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
        mag = abs(c)
        if not body:
            return str(mag)
        return body if mag == 1 else f"{mag}{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(self.terms):
            text = self._monomial_text(e, c)
            if idx == 0:
                parts.append(f"-{text}" if c < 0 else text)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {text}")
        return " ".join(parts)
