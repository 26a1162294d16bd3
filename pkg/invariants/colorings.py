"""
Tait Colorings and Perfect Matchings
Brute-force and state-sum counts of 3-edge-colorings, perfect matching
enumeration, and the sum of Jones values over all matchings.

This module demonstrates understanding of:
- Backtracking enumeration with size guards
- Cross-checking a state expansion against exhaustive search
- Choosing cycle orientations that make every crossing positive
"""

from dataclasses import replace
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence

from loguru import logger

from core.errors import GenusError, OrientationError, SizeLimitError
from core.models import SIDE_A, CycleOrientation, MatchData, MatchedGraph, Sign, TrivalentGraph
from core.states import default_state_limit, graph_state_model
from core.surfaces import complement_cycles, genus, normalize_solid, underlying_graph
from functor.kmap import k_map
from invariants.brackets import jones, labeled_state_sum
from utils.config import get_settings

Matching = FrozenSet[str]


def _edge_limit(limit: Optional[int]) -> int:
    return limit if limit is not None else get_settings().tait_edge_limit


def tait_count_bruteforce(graph: TrivalentGraph, limit: Optional[int] = None) -> int:
    """Proper 3-edge-colorings by backtracking; each free loop contributes a factor 3."""
    limit = _edge_limit(limit)
    if len(graph.edges) > limit:
        raise SizeLimitError("Tait coloring", len(graph.edges), limit)

    ends = {eid: (u, v) for eid, u, v in graph.edges}
    if any(u == v for u, v in ends.values()):
        return 0
    incident = graph.incident()
    order = [eid for eid, _, _ in graph.edges]
    colour: Dict[str, int] = {}

    def place(k: int) -> int:
        if k == len(order):
            return 1
        eid = order[k]
        used = {colour[f] for w in ends[eid] for f in incident[w] if f in colour}
        total = 0
        for c in range(3):
            if c not in used:
                colour[eid] = c
                total += place(k + 1)
                del colour[eid]
        return total

    return place(0) * 3 ** graph.free_loops


def tait_count_expansion(g: MatchedGraph, limit: Optional[int] = None) -> int:
    """Sum over parallel/cross states of proper 3-labelings of the state circles."""
    edge_limit = _edge_limit(limit)
    if len(g.edges) > edge_limit:
        raise SizeLimitError("Tait expansion", len(g.edges), edge_limit)
    model = graph_state_model(normalize_solid(g))
    counts = labeled_state_sum(model, 3, default_state_limit(), "Tait expansion")
    return sum(counts.values())


def enumerate_perfect_matchings(graph: TrivalentGraph, limit: Optional[int] = None,
                                among: Optional[Sequence[str]] = None) -> List[Matching]:
    """All perfect matchings (optionally restricted to a subset of edges), sorted."""
    limit = limit if limit is not None else get_settings().matching_vertex_limit
    if len(graph.vertices) > limit:
        raise SizeLimitError("perfect matchings", len(graph.vertices), limit)

    allowed = set(among) if among is not None else {eid for eid, _, _ in graph.edges}
    ends = {eid: (u, v) for eid, u, v in graph.edges if eid in allowed and u != v}
    incident = {vid: sorted(e for e in eids if e in ends) for vid, eids in graph.incident().items()}
    covered = set()
    chosen: List[str] = []
    found: List[Matching] = []

    def extend() -> None:
        free = [v for v in graph.vertices if v not in covered]
        if not free:
            found.append(frozenset(chosen))
            return
        v = min(free)
        for eid in incident[v]:
            u, w = ends[eid]
            other = w if u == v else u
            if other in covered:
                continue
            covered.update((v, other))
            chosen.append(eid)
            extend()
            chosen.pop()
            covered.difference_update((v, other))

    extend()
    return sorted(set(found), key=lambda m: sorted(m))


def two_factor_count(g: MatchedGraph) -> int:
    """2-factors containing the matching: perfect matchings of the unmatched edges."""
    among = [e.id for e in g.unmatched_edges]
    matchings = enumerate_perfect_matchings(underlying_graph(g), among=among)
    return len(matchings) * 2 ** len(g.free_loops)


def with_matching(g: MatchedGraph, matching: Matching) -> MatchedGraph:
    """Same ribbon structure, matching replaced (positive, dotted at end a)."""
    updated = {}
    for e in g.edges:
        match = MatchData(Sign.POSITIVE, SIDE_A) if e.id in matching else None
        updated[e.id] = replace(e, match=match)
    return g.with_edges(updated)


def natural_cycle_orientation(g: MatchedGraph) -> CycleOrientation:
    """First orientation, by number of reversals then keys, making every crossing of K positive."""
    h = normalize_solid(g)
    if genus(h) != 0:
        raise GenusError("natural orientations exist for genus-0 diagrams only")
    keys = sorted(c.key for c in complement_cycles(h))
    for size in range(len(keys) + 1):
        for reversed_keys in combinations(keys, size):
            orientation = CycleOrientation.from_keys(reversed_keys)
            code = k_map(h, orientation)
            if all(c.sign is Sign.POSITIVE for c in code.crossings):
                return orientation
    raise OrientationError(f"no all-positive orientation among 2^{len(keys)} candidates")


def sum_jones_at_one(g: MatchedGraph, limit: Optional[int] = None) -> int:
    """
    Sum over perfect matchings of the natural-orientation Jones value at q = 1.

    The rotations of g are kept for every matching; each resulting matched
    graph must have genus 0.
    """
    graph = underlying_graph(g)
    total = 0
    for matching in enumerate_perfect_matchings(graph, limit):
        gm = with_matching(g, matching)
        if genus(gm) != 0:
            raise GenusError(f"matching {sorted(matching)} gives a nonzero-genus drawing")
        value = jones(k_map(gm, natural_cycle_orientation(gm))).evaluate(1)
        logger.debug(f"matching {sorted(matching)}: J(1) = {value}")
        total += value
    return total
