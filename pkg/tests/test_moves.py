import random

import pytest

from core.codecs import gauss_code_inline, parse_gauss_code
from core.errors import ReplayError
from core.fixtures import gauss_code_fixture, matched_graph_fixture
from functor.kmap import k_map
from rewrite.reidemeister import (MoveName, MoveStep, apply_move, canonical_code,
                                  reidemeister_neighbors, z_moves)
from rewrite.search import (MoveTrace, SearchBudget, equivalent_within, random_walk,
                            replay_trace)

KINK = "component: O1+ U1+\n"


def test_step_text():
    step = MoveStep.parse("R2-  @ c1,2")
    assert step == MoveStep(MoveName.R2_MINUS, "c1,2")
    assert str(step) == "R2- @ c1,2"


def test_franklin_unwinds_to_the_unknot():
    d = k_map(matched_graph_fixture("FRANKLIN"))
    trace = MoveTrace.from_text("R2- @ c1,2\nR2- @ c3,4  # second pair\n\nR2- @ c5,6\n")
    assert len(trace) == 3
    assert canonical_code(replay_trace(d, trace)) == "()"


def test_franklin_code_pairs():
    d = gauss_code_fixture("FRANKLIN_CODE")
    sites = []
    for _ in range(3):
        (d, step), = [(c, s) for c, s in reidemeister_neighbors(d) if s.move is MoveName.R2_MINUS][:1]
        sites.append(step.site)
    assert sorted(sites) == ["c1,6", "c2,3", "c4,5"]
    assert canonical_code(d) == "()"


def test_kink_removal_and_insertion():
    kink = parse_gauss_code(KINK)
    assert canonical_code(apply_move(kink, MoveStep(MoveName.R1_MINUS, "c1"))) == "()"
    unknot = gauss_code_fixture("UNKNOT0")
    added = apply_move(unknot, MoveStep(MoveName.R1_PLUS, "seg0.0 OU+"))
    assert gauss_code_inline(added) == "O1+ U1+"


def test_r2_insertion_then_removal():
    unknot = gauss_code_fixture("UNKNOT0")
    d = apply_move(unknot, MoveStep(MoveName.R2_PLUS, "over0.0 under0.0 ba+ over-first"))
    assert d.n_crossings == 2
    removals = [s for _, s in reidemeister_neighbors(d) if s.move is MoveName.R2_MINUS]
    assert removals == [MoveStep(MoveName.R2_MINUS, "c1,2")]


def test_move_that_does_not_apply():
    assert apply_move(gauss_code_fixture("TREFOIL"), MoveStep(MoveName.R1_MINUS, "c1")) is None
    with pytest.raises(ReplayError) as info:
        replay_trace(gauss_code_fixture("TREFOIL"), MoveTrace((MoveStep(MoveName.R1_MINUS, "c1"),)))
    assert "does not apply" in str(info.value)


def test_unreadable_trace_line():
    with pytest.raises(ReplayError):
        MoveTrace.from_text("R2- @ c1,2\nR9 @ c1\n")


def test_z_move_swaps_strands():
    (code, step), = list(z_moves(parse_gauss_code(KINK)))
    assert gauss_code_inline(code) == "U1+ O1+"
    assert str(step) == "Z @ c1"


def test_neighbors_are_distinct():
    keys = [canonical_code(c) for c, _ in reidemeister_neighbors(gauss_code_fixture("TREFOIL"))]
    assert len(keys) == len(set(keys))


def test_canonical_code_ignores_labels_and_rotation():
    a = parse_gauss_code("component: O1+ U2+ O3+ U1+ O2+ U3+\n")
    b = parse_gauss_code("component: O7+ U5+ O9+ U7+ O5+ U9+\n")
    c = parse_gauss_code("component: U3+ O1+ U2+ O3+ U1+ O2+\n")
    assert canonical_code(a) == canonical_code(b) == canonical_code(c)


def test_random_walk_is_seeded():
    d = gauss_code_fixture("TREFOIL")
    first = random_walk(d, 5, random.Random(3), max_crossings=6)
    second = random_walk(d, 5, random.Random(3), max_crossings=6)
    assert first == second
    assert len(first[1]) == 5
    assert canonical_code(replay_trace(d, first[1])) == canonical_code(first[0])


def test_search_finds_kink_removal():
    outcome = equivalent_within(parse_gauss_code(KINK), gauss_code_fixture("UNKNOT0"))
    assert outcome.found
    assert len(outcome.trace) == 1
    end = replay_trace(parse_gauss_code(KINK), outcome.trace)
    assert canonical_code(end) == "()"


def test_search_never_claims_inequivalence():
    outcome = equivalent_within(gauss_code_fixture("TREFOIL"), gauss_code_fixture("UNKNOT0"),
                                SearchBudget(max_depth=3))
    assert not outcome.found
    assert outcome.summary().startswith("not found within budget")
