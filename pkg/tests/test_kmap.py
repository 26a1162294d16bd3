import random

import pytest

from core.codecs import gauss_code_inline
from core.fixtures import (GAUSS_CODE_TEXTS, gauss_code_fixture, matched_graph_fixture,
                           random_matched_graph)
from core.models import SIDE_A, CycleOrientation, Sign
from core.surfaces import complement_cycles, graph_isomorphic, underlying_graph
from functor.kmap import forget_direction, k_inverse, k_map, k_map_traced
from functor.roundtrip import code_round_trip, graph_round_trip, round_trip_check
from rewrite.graphene import canonical_graph, replay_graph_trace
from rewrite.reidemeister import MoveName, canonical_code


def test_theta_is_a_kink():
    d = k_map(matched_graph_fixture("THETA"))
    assert gauss_code_inline(d) == "U1+ O1+"
    assert canonical_code(d) == "O1+ U1+"


def test_franklin_image():
    d = k_map(matched_graph_fixture("FRANKLIN"))
    assert gauss_code_inline(d) == "O1+ O2- O3+ O4- O5+ O6- U2- U1+ U4- U3+ U6- U5+"
    assert canonical_code(d) == canonical_code(gauss_code_fixture("FRANKLIN_CODE"))


def test_ungraph_is_the_unknot():
    d = k_map(matched_graph_fixture("UNGRAPH1"))
    assert d.n_components == 1
    assert d.n_crossings == 0


def test_petersen_gives_a_two_component_link():
    assert k_map(matched_graph_fixture("PETERSEN")).n_components == 2


def test_reversing_one_cube_cycle_flips_the_spokes():
    g = matched_graph_fixture("CUBEQ3")
    default = k_map(g)
    flipped = k_map(g, CycleOrientation(frozenset({"t01"})))
    assert {c.sign for c in default.crossings} == {Sign.NEGATIVE}
    assert {c.sign for c in flipped.crossings} == {Sign.POSITIVE}


def test_trace_covers_every_unmatched_edge():
    g = matched_graph_fixture("CUBEQ3")
    trace = k_map_traced(g)
    assert set(trace.edge_segments) == {e.id for e in g.unmatched_edges}
    assert sorted(trace.crossing_of.values()) == [1, 2, 3, 4]
    assert trace.component_keys == ("b01", "t01")


def test_trefoil_preimage_is_k33():
    g = k_inverse(gauss_code_fixture("TREFOIL"))
    assert len(g.matched_edges) == 3
    assert graph_isomorphic(underlying_graph(g), underlying_graph(matched_graph_fixture("K33TREF")))


def test_unknot_preimage_is_a_free_loop():
    g = k_inverse(gauss_code_fixture("UNKNOT0"))
    assert g.vertices == ()
    assert g.free_loops == ("l00",)


@pytest.mark.parametrize("name", sorted(GAUSS_CODE_TEXTS))
def test_code_round_trip(name):
    assert code_round_trip(gauss_code_fixture(name))


def test_graph_round_trip_on_theta():
    g = matched_graph_fixture("THETA")
    outcome = graph_round_trip(g)
    assert outcome.found
    assert len(outcome.trace) == 0
    assert canonical_graph(g) == canonical_graph(k_inverse(k_map(g)))


def test_graph_round_trip_trace_replays():
    g = matched_graph_fixture("K4M")
    outcome = graph_round_trip(g)
    assert outcome.found
    assert set(outcome.trace.moves()) <= {MoveName.G4, MoveName.G5, MoveName.M5}
    end = replay_graph_trace(g, outcome.trace)
    assert canonical_graph(end) == canonical_graph(k_inverse(k_map(g)))
    assert round_trip_check(g)


def test_random_graphs_survive_the_functor():
    rng = random.Random(7)
    for _ in range(30):
        g = random_matched_graph(rng, rng.randint(1, 6))
        d = k_map(g)
        assert d.n_crossings == len(g.matched_edges)
        assert code_round_trip(d)


def test_forget_direction_moves_every_dot():
    g = forget_direction(matched_graph_fixture("FRANKLIN"))
    assert g.z_flag
    assert {e.match.dot for e in g.matched_edges} == {SIDE_A}


@pytest.mark.parametrize("name", sorted(GAUSS_CODE_TEXTS))
def test_preimage_cycles_follow_the_components(name):
    d = gauss_code_fixture(name)
    g = k_inverse(d)
    assert sorted(len(c) for c in complement_cycles(g)) == sorted(len(comp) for comp in d.components if comp)
    assert len(g.free_loops) == sum(1 for comp in d.components if not comp)
