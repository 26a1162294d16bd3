import pytest

from core.errors import SizeLimitError
from core.fixtures import matched_graph_fixture
from core.surfaces import underlying_graph
from invariants.brackets import penrose_number, two_factor_bracket
from invariants.colorings import (enumerate_perfect_matchings, natural_cycle_orientation,
                                  sum_jones_at_one, tait_count_bruteforce,
                                  tait_count_expansion, two_factor_count, with_matching)
from functor.kmap import k_map
from utils.config import get_settings


@pytest.mark.parametrize("name", ["THETA", "K4M", "CUBEQ3", "PETERSEN", "K33TREF", "TWOCUT"])
def test_tait_expansion_matches_brute_force(name):
    g = matched_graph_fixture(name)
    assert tait_count_expansion(g) == tait_count_bruteforce(underlying_graph(g))


def test_tait_counts():
    assert tait_count_bruteforce(underlying_graph(matched_graph_fixture("THETA"))) == 6
    assert tait_count_bruteforce(underlying_graph(matched_graph_fixture("K4M"))) == 6
    assert tait_count_bruteforce(underlying_graph(matched_graph_fixture("PETERSEN"))) == 0
    assert tait_count_bruteforce(underlying_graph(matched_graph_fixture("UNGRAPH1"))) == 3


def test_tait_edge_limit():
    with pytest.raises(SizeLimitError):
        tait_count_bruteforce(underlying_graph(matched_graph_fixture("PETERSEN")), limit=10)


@pytest.mark.parametrize("name, expected", [("THETA", 3), ("K4M", 3), ("CUBEQ3", 9),
                                            ("PETERSEN", 6)])
def test_perfect_matching_counts(name, expected):
    assert len(enumerate_perfect_matchings(underlying_graph(matched_graph_fixture(name)))) == expected


@pytest.mark.parametrize("name", ["THETA", "K4M", "CUBEQ3"])
def test_penrose_number_counts_tait_colorings_in_genus_zero(name):
    g = matched_graph_fixture(name)
    assert penrose_number(g) == tait_count_bruteforce(underlying_graph(g))


@pytest.mark.parametrize("name, expected", [("THETA", 2), ("K4M", 2), ("CUBEQ3", 4)])
def test_two_factor_bracket_at_one_counts_two_factors(name, expected):
    g = matched_graph_fixture(name)
    assert two_factor_count(g) == expected
    assert two_factor_bracket(g).evaluate(1) == expected


def test_natural_orientation_of_the_cube():
    g = matched_graph_fixture("CUBEQ3")
    orientation = natural_cycle_orientation(g)
    assert len(orientation.reversed_keys) == 1
    assert all(c.sign.value == "+" for c in k_map(g, orientation).crossings)


def test_with_matching_moves_the_matching():
    g = matched_graph_fixture("THETA")
    h = with_matching(g, frozenset({"e2"}))
    assert [e.id for e in h.matched_edges] == ["e2"]


@pytest.mark.parametrize("name", ["THETA", "K4M", "CUBEQ3"])
def test_sum_of_jones_values_is_the_tait_count(name):
    g = matched_graph_fixture(name)
    assert sum_jones_at_one(g) == tait_count_bruteforce(underlying_graph(g))


def test_tait_expansion_limits_edges_not_sites(monkeypatch):
    petersen = matched_graph_fixture("PETERSEN")
    with pytest.raises(SizeLimitError):
        tait_count_expansion(petersen, limit=10)
    assert tait_count_expansion(petersen, limit=15) == 0
    monkeypatch.setenv("GRK_STATE_LIMIT", "2")
    get_settings.cache_clear()
    with pytest.raises(SizeLimitError):
        tait_count_expansion(matched_graph_fixture("CUBEQ3"))


def test_sum_jones_respects_the_matching_limit():
    with pytest.raises(SizeLimitError):
        sum_jones_at_one(matched_graph_fixture("CUBEQ3"), limit=4)
