import random

import pytest

from core.codecs import parse_gauss_code
from core.errors import SizeLimitError
from core.fixtures import gauss_code_fixture, matched_graph_fixture, random_matched_graph
from core.polynomial import LaurentPoly
from functor.kmap import k_map
from invariants.brackets import (binary_bracket, crossing_counts, jones, kauffman_bracket,
                                 normalized_binary, penrose_number, two_factor_bracket, writhe)
from rewrite.search import random_walk

UNKNOT_VALUE = LaurentPoly.from_dict({-1: 1, 1: 1})


def test_unknot_and_kink():
    assert jones(gauss_code_fixture("UNKNOT0")) == UNKNOT_VALUE
    assert jones(parse_gauss_code("component: O1+ U1+\n")) == UNKNOT_VALUE
    assert jones(parse_gauss_code("component: O1- U1-\n")) == UNKNOT_VALUE


def test_hopf_bracket():
    assert str(kauffman_bracket(gauss_code_fixture("HOPF2"))) == "q^-2 + 1 + q^2 + q^4"


def test_trefoil_jones():
    d = gauss_code_fixture("TREFOIL")
    assert crossing_counts(d) == (3, 0)
    assert writhe(d) == 3
    assert str(jones(d)) == "q + q^3 + q^5 - q^9"


def test_theta_two_factor_bracket():
    assert str(two_factor_bracket(matched_graph_fixture("THETA"))) == "q^-2 + 1"
    assert penrose_number(matched_graph_fixture("THETA")) == 6


@pytest.mark.parametrize("name", ["THETA", "K4M", "CUBEQ3", "FRANKLIN", "K33TREF", "TWOCUT",
                                  "EMBED_EXAMPLE", "UNGRAPH1"])
def test_two_factor_bracket_is_the_bracket_of_k(name):
    g = matched_graph_fixture(name)
    assert two_factor_bracket(g) == kauffman_bracket(k_map(g))


def test_two_factor_bracket_on_random_graphs():
    rng = random.Random(11)
    for _ in range(100):
        g = random_matched_graph(rng, rng.randint(1, 8))
        assert two_factor_bracket(g) == kauffman_bracket(k_map(g))


@pytest.mark.parametrize("seed", [3, 5, 8])
def test_two_factor_bracket_on_heavily_decorated_graphs(seed):
    rng = random.Random(seed)
    for _ in range(30):
        g = random_matched_graph(rng, rng.randint(1, 6), hollow_rate=0.8, twist_rate=0.8, loop_rate=0.5)
        assert two_factor_bracket(g) == kauffman_bracket(k_map(g))


def test_state_limit():
    with pytest.raises(SizeLimitError) as info:
        kauffman_bracket(gauss_code_fixture("TREFOIL"), limit=2)
    assert info.value.size == 3


def test_binary_bracket_values():
    assert normalized_binary(gauss_code_fixture("HOPF2")).evaluate(1) == 4
    assert binary_bracket(gauss_code_fixture("ODD_LINK")).is_zero()
    assert binary_bracket(gauss_code_fixture("UNKNOT0")) == LaurentPoly.constant(2, var="A")


@pytest.mark.parametrize("name, seed", [("TREFOIL", 1), ("TREFOIL", 2), ("HOPF2", 3),
                                        ("EMBED_CODE", 4), ("UNKNOT0", 5)])
def test_jones_and_binary_survive_random_walks(name, seed):
    d = gauss_code_fixture(name)
    walked, trace = random_walk(d, 6, random.Random(seed), max_crossings=7)
    assert len(trace) == 6
    assert jones(walked) == jones(d)
    assert normalized_binary(walked) == normalized_binary(d)
