"""
Graphene / Virtual Link Functor
Replaces matched edges by classical crossings (K) and classical crossings by
matched edges (K inverse).

This module demonstrates understanding of:
- Reading each complement cycle as one link component
- Deriving crossing signs from local traversal directions
- Rebuilding a ribbon diagram from pass sequences
- Direction-forgetting for Z-representatives

Crossing template on the all-solid form, for a matched edge m = (u, v) with
unmatched ends (x1, x2) after m in the rotation at u (likewise (y1, y2) at v):
the strand through the dotted endpoint is the over strand; a vertex is
traversed forward when it is entered through x1. A positive edge gives a
positive crossing iff both endpoints are traversed the same way, a negative
edge the opposite. With this template the A-smoothing of the crossing is the
parallel smoothing (x1 with y2, x2 with y1) of a positive edge.
"""

from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

from loguru import logger

from core.errors import ConstructionError
from core.models import (SIDE_A, SIDE_B, CycleOrientation, Decoration, Edge, EdgeEnd,
                         GaussCode, MatchData, MatchedGraph, Pass, Segment, Sign, Strand,
                         Vertex)
from core.surfaces import complement_cycles, normalize_solid
from core.validation import validate_gauss_code, validate_matched_graph


@dataclass(frozen=True)
class KTrace:
    code: GaussCode
    edge_segments: Dict[str, Segment]
    component_keys: Tuple[str, ...]
    crossing_of: Dict[str, int]


def _over_vertex(g: MatchedGraph, eid: str) -> str:
    dot = g.edge(eid).match.dot
    return g.owner(EdgeEnd(eid, dot))


def k_map_traced(g: MatchedGraph, orientation: Optional[CycleOrientation] = None) -> KTrace:
    """K together with the unmatched-edge to segment correspondence."""
    orientation = orientation or CycleOrientation()
    h = normalize_solid(g)
    cycles = sorted(complement_cycles(h), key=lambda c: c.key)

    # One (vertex, arrive, leave) walk per component
    walks: List[List[Tuple[str, EdgeEnd, EdgeEnd]]] = []
    keys: List[str] = []
    for cycle in cycles:
        walk = [(vid, arrive, leave) for vid, (arrive, leave) in zip(cycle.vertices, cycle.steps)]
        if orientation.is_reversed(cycle.key):
            walk = [(vid, leave, arrive) for vid, arrive, leave in reversed(walk)]
        walks.append(walk)
        keys.append(cycle.key)

    forward: Dict[str, bool] = {}
    for walk in walks:
        for vid, arrive, _ in walk:
            forward[vid] = arrive == h.unmatched_ends(vid)[0]

    numbering: Dict[str, int] = {}
    components: List[Tuple[Pass, ...]] = []
    edge_segments: Dict[str, Segment] = {}
    for i, walk in enumerate(walks):
        passes = []
        for j, (vid, _, leave) in enumerate(walk):
            m = h.matched_end_at(vid).edge
            numbering.setdefault(m, len(numbering) + 1)
            strand = Strand.OVER if _over_vertex(h, m) == vid else Strand.UNDER
            passes.append(Pass(numbering[m], strand))
            edge_segments[leave.edge] = (i, j)
        components.append(tuple(passes))

    for lid in h.free_loops:
        edge_segments[lid] = (len(components), 0)
        components.append(())
        keys.append(lid)

    signs: Dict[int, Sign] = {}
    for e in h.matched_edges:
        u, v = h.endpoints(e.id)
        same = forward[u] == forward[v]
        positive = same if e.match.sign is Sign.POSITIVE else not same
        signs[numbering[e.id]] = Sign.of(positive)

    code = GaussCode.build(components, signs)
    validate_gauss_code(code).raise_if_invalid()
    return KTrace(code, edge_segments, tuple(keys), numbering)


def k_map(g: MatchedGraph, orientation: Optional[CycleOrientation] = None) -> GaussCode:
    code = k_map_traced(g, orientation).code
    logger.debug(f"K: {len(g.matched_edges)} matched edges -> {code.n_components} components")
    return code


def _arc(i: int, j: int) -> str:
    return f"a{i:02d}_{j:03d}"


def _pass_vertex(i: int, j: int) -> str:
    return f"p{i:02d}_{j:03d}"


def k_inverse(d: GaussCode) -> MatchedGraph:
    """
    K inverse: a positive matched edge per crossing, dotted at the over vertex.

    A negative crossing reverses the rotation at its under vertex, which is the
    all-solid form of the hollow vertex the replacement produces.
    """
    validate_gauss_code(d).raise_if_invalid()
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    loops: List[str] = []

    for i, comp in enumerate(d.components):
        n = len(comp)
        if n == 0:
            loops.append(f"l{i:02d}")
            continue
        for j, p in enumerate(comp):
            m = EdgeEnd(f"m{p.crossing:03d}", SIDE_A if p.strand is Strand.OVER else SIDE_B)
            arrive = EdgeEnd(_arc(i, (j - 1) % n), SIDE_B)
            leave = EdgeEnd(_arc(i, j), SIDE_A)
            if d.sign(p.crossing) is Sign.NEGATIVE and p.strand is Strand.UNDER:
                rotation = (m, leave, arrive)
            else:
                rotation = (m, arrive, leave)
            vertices.append(Vertex(_pass_vertex(i, j), Decoration.SOLID, rotation))
            edges.append(Edge(_arc(i, j)))

    for cid in d.crossing_ids:
        edges.append(Edge(f"m{cid:03d}", MatchData(Sign.POSITIVE, SIDE_A)))

    g = MatchedGraph.build(vertices, edges, loops)
    validate_matched_graph(g).raise_if_invalid()
    # One complement cycle per nonempty component, of the same length
    lengths = sorted(len(c) for c in complement_cycles(g))
    if lengths != sorted(len(comp) for comp in d.components if comp):
        raise ConstructionError(f"K inverse produced complement cycles of lengths {lengths}")
    return g


def forget_direction(g: MatchedGraph) -> MatchedGraph:
    """Z-representative: every dot moved to end a, flag set."""
    updated = {e.id: replace(e, match=MatchData(e.match.sign, SIDE_A)) for e in g.matched_edges}
    out = g.with_edges(updated)
    return MatchedGraph.build(out.vertices, out.edges, out.free_loops, z_flag=True)
