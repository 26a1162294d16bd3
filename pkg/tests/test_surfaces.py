from dataclasses import replace

import pytest

from core.codecs import parse_matched_graph, serialize_matched_graph
from core.errors import NonOrientableError
from core.fixtures import MATCHED_GRAPH_TEXTS, matched_graph_fixture
from core.models import Decoration
from core.surfaces import (boundary_components, complement_cycles, component_genera,
                           euler_characteristic, genus, graph_isomorphic, is_even_matching,
                           normalize_solid, orientation_keys, underlying_graph)


@pytest.mark.parametrize("name, expected", [
    ("THETA", 0), ("UNGRAPH1", 0), ("CUBEQ3", 0), ("K4M", 0), ("TWOCUT", 0), ("DIGONS", 0),
    ("K33TREF", 1),
])
def test_fixture_genus(name, expected):
    assert genus(matched_graph_fixture(name)) == expected


def test_theta_has_three_faces():
    g = matched_graph_fixture("THETA")
    assert len(boundary_components(g)) == 3
    assert euler_characteristic(g) == 2


def test_every_dart_lies_in_one_face():
    g = matched_graph_fixture("CUBEQ3")
    darts = [h for face in boundary_components(g) for h in face]
    assert len(darts) == len(set(darts)) == 2 * len(g.edges)


def test_free_loop_is_a_sphere():
    g = matched_graph_fixture("UNGRAPH1")
    assert euler_characteristic(g) == 2
    assert component_genera(g) == [0]


def test_complement_cycles_of_cube():
    cycles = complement_cycles(matched_graph_fixture("CUBEQ3"))
    assert [len(c) for c in cycles] == [4, 4]
    assert orientation_keys(matched_graph_fixture("CUBEQ3")) == ["b01", "t01"]
    assert is_even_matching(matched_graph_fixture("CUBEQ3"))


def test_cycle_edges_follow_the_walk():
    (cycle,) = complement_cycles(matched_graph_fixture("THETA"))
    assert cycle.key == "e2"
    assert sorted(cycle.edges) == ["e2", "e3"]
    assert sorted(cycle.vertices) == ["u", "v"]


def test_hollow_vertex_normalizes_to_reversed_rotation():
    g = matched_graph_fixture("THETA")
    hollow = g.with_vertices({"u": g.vertex("u").flipped()})
    assert serialize_matched_graph(normalize_solid(hollow)) == serialize_matched_graph(g)


def test_twisting_every_theta_edge_reverses_a_vertex():
    g = matched_graph_fixture("THETA")
    twisted = g.with_edges({eid: replace(g.edge(eid), twisted=True) for eid in ("e1", "e2", "e3")})
    h = normalize_solid(twisted)
    assert h.is_normalized()
    assert serialize_matched_graph(h) == serialize_matched_graph(g.with_vertices({"v": g.vertex("v").reversed()}))
    assert genus(h) == 1


def test_twists_around_a_hollow_vertex_cancel():
    g = matched_graph_fixture("THETA")
    twisted = g.with_edges({eid: replace(g.edge(eid), twisted=True) for eid in ("e1", "e2", "e3")})
    hollow = twisted.with_vertices({"v": replace(twisted.vertex("v"), decoration=Decoration.HOLLOW)})
    h = normalize_solid(hollow)
    assert serialize_matched_graph(h) == serialize_matched_graph(g)
    assert genus(h) == 0


def test_odd_twist_cycle_is_non_orientable():
    g = matched_graph_fixture("THETA")
    twisted = g.with_edges({"e2": replace(g.edge("e2"), twisted=True)})
    with pytest.raises(NonOrientableError):
        normalize_solid(twisted)


def test_underlying_graph_isomorphism_ignores_decoration():
    g = matched_graph_fixture("K4M")
    hollow = g.with_vertices({"c": g.vertex("c").flipped()})
    assert graph_isomorphic(underlying_graph(g), underlying_graph(hollow))
    assert not graph_isomorphic(underlying_graph(g), underlying_graph(matched_graph_fixture("CUBEQ3")))


def test_parse_round_trip_keeps_genus():
    g = parse_matched_graph(MATCHED_GRAPH_TEXTS["K33TREF"])
    assert genus(parse_matched_graph(serialize_matched_graph(g))) == 1
