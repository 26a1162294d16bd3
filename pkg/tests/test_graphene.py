import pytest

from core.codecs import parse_matched_graph, serialize_matched_graph
from core.errors import BifurcationError, PatternMismatchError, ReplayError
from core.fixtures import DIGON_REGION, FLIP_REGION, matched_graph_fixture
from core.models import Decoration, Sign
from core.surfaces import genus, normalize_solid
from homology.khovanov import baldridge_homology
from invariants.brackets import two_factor_bracket
from rewrite.graphene import (graphene_move, graphene_neighbors, flip_region, region_cut,
                              replay_graph_trace)
from rewrite.reidemeister import MoveName, MoveStep
from rewrite.search import MoveTrace


def test_g1_removes_the_theta_kink():
    g = graphene_move(matched_graph_fixture("THETA"), MoveName.G1, "R1-:c1")
    assert g.vertices == ()
    assert len(g.free_loops) == 1


def test_g1_neighbors_are_labelled_by_their_conjugate():
    steps = [s for _, s in graphene_neighbors(matched_graph_fixture("THETA"), MoveName.G1)]
    assert MoveStep(MoveName.G1, "R1-:c1") in steps
    assert all(s.site.split(":")[0] in ("R1+", "R1-") for s in steps)


def test_franklin_reduces_to_an_ungraph_by_g2():
    g = graphene_move(matched_graph_fixture("FRANKLIN"), MoveName.G2, "R2-:c1,2")
    assert len(g.matched_edges) == 4
    while g.vertices:
        g, step = next((h, s) for h, s in graphene_neighbors(g, MoveName.G2)
                       if s.site.startswith("R2-:"))
    assert len(g.free_loops) == 1


def test_replayed_graph_trace():
    trace = MoveTrace.from_text("G4 @ e1\nG5 @ e1.a\nM5 @ u\n")
    g = replay_graph_trace(matched_graph_fixture("THETA"), trace)
    assert g.edge("e1").match.sign is Sign.NEGATIVE
    assert genus(g) == 1


def test_replay_that_reverses_both_theta_vertices():
    g = matched_graph_fixture("THETA")
    h = replay_graph_trace(g, MoveTrace.from_text("G4 @ e1\nM5 @ u\nM5 @ v\n"))
    assert {v.decoration for v in h.vertices} == {Decoration.SOLID}
    assert genus(h) == 0
    mirrored = g.with_vertices({"u": g.vertex("u").reversed(), "v": g.vertex("v").reversed()})
    assert serialize_matched_graph(h) == serialize_matched_graph(mirrored)


def test_conjugated_move_must_match_its_family():
    with pytest.raises(PatternMismatchError):
        graphene_move(matched_graph_fixture("THETA"), MoveName.G2, "R1-:c1")
    with pytest.raises(PatternMismatchError):
        graphene_move(matched_graph_fixture("THETA"), MoveName.G1, "c1")


def test_g4_toggles_both_endpoints():
    g = matched_graph_fixture("THETA")
    h = graphene_move(g, MoveName.G4, "e1")
    assert {v.decoration for v in h.vertices} == {Decoration.HOLLOW}
    assert graphene_move(h, MoveName.G4, "e1") == g


def test_g4_needs_a_matched_edge():
    with pytest.raises(PatternMismatchError):
        graphene_move(matched_graph_fixture("THETA"), MoveName.G4, "e2")


def test_g5_flips_sign_and_one_decoration():
    g = matched_graph_fixture("THETA")
    h = graphene_move(g, MoveName.G5, "e1.b")
    assert h.edge("e1").match.sign is Sign.NEGATIVE
    assert h.vertex("v").decoration is Decoration.HOLLOW
    assert h.vertex("u").decoration is Decoration.SOLID
    assert graphene_move(h, MoveName.G5, "e1.b") == g


def test_m5_is_invisible_after_normalizing():
    g = matched_graph_fixture("K4M")
    h = graphene_move(g, MoveName.M5, "o1")
    assert h.vertex("o1").decoration is Decoration.HOLLOW
    assert serialize_matched_graph(normalize_solid(h)) == serialize_matched_graph(g)
    assert two_factor_bracket(h) == two_factor_bracket(g)


def test_region_cut_of_twocut():
    g = matched_graph_fixture("TWOCUT")
    assert region_cut(g, FLIP_REGION) == ["c0", "c1"]


def test_region_cut_of_digons():
    assert region_cut(matched_graph_fixture("DIGONS"), DIGON_REGION) == ["s", "t"]


def test_two_flip_keeps_genus_and_homology():
    g = matched_graph_fixture("DIGONS")
    flipped = flip_region(g, DIGON_REGION)
    assert flipped != g
    assert genus(flipped) == 0
    h = baldridge_homology(flipped)
    assert h.ranks == baldridge_homology(g).ranks == {(0, 1): 1, (0, 3): 1}


BRIDGED = """\
vertex a solid m1.a p.a e1.a
vertex b solid m1.b e2.a p.b
vertex r solid m0.a e1.b e2.b
vertex z solid m0.b w.b w.a
medge m1 + a
medge m0 + a
edge p
edge e1
edge e2
edge w
"""


def test_matched_edges_do_not_count_towards_the_cut():
    g = parse_matched_graph(BRIDGED)
    assert region_cut(g, ["r"]) == ["e1", "e2"]
    flipped = flip_region(g, ["r"])
    assert flipped.vertex("r").rotation == ("m0.a", "e2.b", "e1.b")
    assert genus(flipped) == 0


def test_twocut_cube_has_a_bifurcation():
    with pytest.raises(BifurcationError):
        baldridge_homology(matched_graph_fixture("TWOCUT"))


def test_zero_flip_of_theta():
    g = matched_graph_fixture("THETA")
    flipped = graphene_move(g, MoveName.FLIP, "u,v")
    assert baldridge_homology(flipped) == baldridge_homology(g)


def test_flip_rejects_wide_regions():
    with pytest.raises(PatternMismatchError):
        flip_region(matched_graph_fixture("TWOCUT"), ["l0", "l1"])


def test_replay_reports_the_failing_step():
    trace = MoveTrace.from_text("G4 @ e1\nG4 @ e2\n")
    with pytest.raises(ReplayError) as info:
        replay_graph_trace(matched_graph_fixture("THETA"), trace)
    assert info.value.step == 2
