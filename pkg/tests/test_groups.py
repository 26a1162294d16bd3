import numpy as np
import pytest

from core.errors import UsageError
from core.fixtures import gauss_code_fixture
from invariants.groups import (abelianization_rank, fox_colorings, rank_mod_p,
                               wirtinger_presentation)


def test_trefoil_presentation():
    presentation = wirtinger_presentation(gauss_code_fixture("TREFOIL"))
    assert presentation.generators == ("x1", "x2", "x3")
    assert len(presentation.relators) == 3
    assert all(len(word) == 4 for word in presentation.relators)
    assert presentation.text().startswith("gens: x1,x2,x3; rels: ")


@pytest.mark.parametrize("name, expected", [("UNKNOT0", 1), ("TREFOIL", 1), ("HOPF2", 2),
                                            ("ODD_LINK", 2)])
def test_abelianization_rank(name, expected):
    assert abelianization_rank(wirtinger_presentation(gauss_code_fixture(name))) == expected


@pytest.mark.parametrize("name, p, expected", [("TREFOIL", 3, 9), ("TREFOIL", 5, 5),
                                               ("UNKNOT0", 7, 7), ("HOPF2", 3, 9)])
def test_fox_colorings(name, p, expected):
    assert fox_colorings(gauss_code_fixture(name), p) == expected


@pytest.mark.parametrize("p", [1, 2, 4, 9, 101])
def test_fox_colorings_need_a_small_odd_prime(p):
    with pytest.raises(UsageError):
        fox_colorings(gauss_code_fixture("TREFOIL"), p)


def test_rank_mod_p():
    m = np.array([[-1, -1, 2], [-1, 2, -1], [2, -1, -1]])
    assert rank_mod_p(m, 3) == 1
    assert rank_mod_p(m, 5) == 2
