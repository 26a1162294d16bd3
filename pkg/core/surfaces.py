"""
Ribbon Surface Combinatorics
Complement cycles, orientation normalization, boundary tracing and genus.

This module demonstrates understanding of:
- Face tracing on rotation systems
- Twist cancellation along a spanning forest
- Euler characteristic bookkeeping per connected component
- Graph isomorphism on multigraphs via networkx
"""

from collections import deque
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

import networkx as nx
from loguru import logger

from core.errors import NonOrientableError, SizeLimitError
from core.models import (SIDE_A, SIDE_B, Decoration, EdgeEnd, MatchedGraph, TrivalentGraph,
                         Vertex)
from utils.config import get_settings

Face = Tuple[EdgeEnd, ...]


@dataclass(frozen=True)
class ComplementCycle:
    """
    One cycle of G minus M, read from the tail of its lowest-id edge.

    steps[k] = (arrive, leave): the unmatched ends used at the k-th vertex.
    The edge leaving vertex k is steps[k][1].edge; the first vertex is the
    head of the key edge.
    """

    key: str
    vertices: Tuple[str, ...]
    steps: Tuple[Tuple[EdgeEnd, EdgeEnd], ...]

    @property
    def edges(self) -> Tuple[str, ...]:
        return tuple(leave.edge for _, leave in self.steps[-1:] + self.steps[:-1])

    def __len__(self) -> int:
        return len(self.steps)


def _walk_cycle(g: MatchedGraph, key: str) -> ComplementCycle:
    start = EdgeEnd(key, SIDE_A)
    arrive = EdgeEnd(key, SIDE_B)
    vertices, steps = [], []
    while True:
        vid = g.owner(arrive)
        leave = g.other_unmatched_end(vid, arrive)
        vertices.append(vid)
        steps.append((arrive, leave))
        if leave == start:
            break
        arrive = leave.opposite()
    return ComplementCycle(key, tuple(vertices), tuple(steps))


def complement_cycles(g: MatchedGraph) -> List[ComplementCycle]:
    """Cycles of the unmatched edges, ordered by their lowest vertex id."""
    seen = set()
    cycles = []
    for e in g.unmatched_edges:
        if e.id in seen:
            continue
        cycle = _walk_cycle(g, e.id)
        seen.update(cycle.edges)
        cycles.append(cycle)
    cycles.sort(key=lambda c: min(c.vertices))
    return cycles


def orientation_keys(g: MatchedGraph) -> List[str]:
    """Keys a CycleOrientation may reverse: cycle keys by lowest edge id, then free loops."""
    return sorted(c.key for c in complement_cycles(g)) + list(g.free_loops)


def is_even_matching(g: MatchedGraph) -> bool:
    return all(len(c) % 2 == 0 for c in complement_cycles(g))


def normalize_solid(g: MatchedGraph) -> MatchedGraph:
    """
    Equivalent all-solid, twist-free diagram.

    Hollow vertices become solid with reversed rotation; remaining band twists
    are cancelled by reversing the rotations of a vertex set found by
    2-colouring a spanning forest.
    """
    if g.is_normalized():
        return g

    solid: Dict[str, Vertex] = {}
    for v in g.vertices:
        if v.decoration is Decoration.HOLLOW:
            v = v.flipped()
        solid[v.id] = v

    adjacency: Dict[str, List[Tuple[str, bool]]] = {vid: [] for vid in solid}
    for e in g.edges:
        u, w = g.endpoints(e.id)
        if u == w:
            if e.twisted:
                raise NonOrientableError(f"twisted loop {e.id} at vertex {u}")
            continue
        adjacency[u].append((w, e.twisted))
        adjacency[w].append((u, e.twisted))

    flip: Dict[str, int] = {}
    for root in sorted(solid):
        if root in flip:
            continue
        flip[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, twisted in adjacency[u]:
                want = flip[u] ^ int(twisted)
                if w not in flip:
                    flip[w] = want
                    queue.append(w)
                elif flip[w] != want:
                    raise NonOrientableError(
                        f"odd twist parity on a cycle through {u} and {w}; surface is non-orientable")

    vertices = [v.reversed() if flip[v.id] else v for v in solid.values()]
    edges = [replace(e, twisted=False) for e in g.edges]
    out = MatchedGraph.build(vertices, edges, g.free_loops, g.z_flag)
    logger.debug(f"normalized {sum(flip.values())} of {len(flip)} vertices")
    return out


def _trace_faces(g: MatchedGraph) -> List[Face]:
    faces: List[Face] = []
    visited = set()
    darts = sorted(g.end_owner)
    for start in darts:
        if start in visited:
            continue
        walk = []
        h = start
        while h not in visited:
            visited.add(h)
            walk.append(h)
            opp = h.opposite()
            h = g.vertex(g.owner(opp)).successor(opp)
        faces.append(tuple(walk))
    for lid in g.free_loops:
        faces.append((EdgeEnd(lid, SIDE_A),))
        faces.append((EdgeEnd(lid, SIDE_B),))
    return faces


def boundary_components(g: MatchedGraph) -> List[Face]:
    """Face walks of the normalized rotation system; each dart lies in exactly one walk."""
    return _trace_faces(normalize_solid(g))


def underlying_graph(g: MatchedGraph) -> TrivalentGraph:
    edges = tuple((e.id, *g.endpoints(e.id)) for e in g.edges)
    return TrivalentGraph(tuple(v.id for v in g.vertices), edges, len(g.free_loops))


def euler_characteristic(g: MatchedGraph) -> int:
    """V - E + F, with each free loop counted as one vertex, one edge and two faces."""
    n_loops = len(g.free_loops)
    return (len(g.vertices) + n_loops) - (len(g.edges) + n_loops) + len(boundary_components(g))


def component_genera(g: MatchedGraph) -> List[int]:
    """Genus of each connected component (free loops are spheres)."""
    h = normalize_solid(g)
    graph = nx.MultiGraph()
    graph.add_nodes_from(v.id for v in h.vertices)
    for e in h.edges:
        graph.add_edge(*h.endpoints(e.id))

    faces = _trace_faces(h)
    face_count: Dict[int, int] = {}
    comp_of: Dict[str, int] = {}
    parts = sorted(nx.connected_components(graph), key=min)
    for idx, part in enumerate(parts):
        for vid in part:
            comp_of[vid] = idx
    for face in faces:
        if face[0].edge in h.free_loops:
            continue
        idx = comp_of[h.owner(face[0])]
        face_count[idx] = face_count.get(idx, 0) + 1

    genera = []
    for idx, part in enumerate(parts):
        sub = graph.subgraph(part)
        chi = sub.number_of_nodes() - sub.number_of_edges() + face_count.get(idx, 0)
        genera.append((2 - chi) // 2)
    genera.extend(0 for _ in h.free_loops)
    return genera


def genus(g: MatchedGraph) -> int:
    return sum(component_genera(g))


def graph_isomorphic(g1: TrivalentGraph, g2: TrivalentGraph, limit: Optional[int] = None) -> bool:
    """Edge-preserving vertex bijection test; decorations and matchings are ignored."""
    limit = limit if limit is not None else get_settings().iso_limit
    for graph in (g1, g2):
        size = len(graph.vertices) + graph.free_loops
        if size > limit:
            raise SizeLimitError("graph isomorphism", size, limit)
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())
