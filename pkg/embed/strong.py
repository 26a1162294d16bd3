"""
Strong Embeddings from Bicolored Multicycles
Builds a signed rotation system on the underlying graph whose faces are the
bichromatic cycles of the Tait coloring (multicycle colors 1 and 2, matched
edges color 3), then checks the strong-embedding conditions.

This module demonstrates understanding of:
- Signed rotation systems and twisted face tracing
- Euler genus and orientability of the traced surface
- Failing loudly when a construction misses its postconditions
"""

from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from loguru import logger

from core.errors import ConstructionError, NonOrientableError
from core.models import SIDE_A, SIDE_B, CycleOrientation, Decoration, EdgeEnd, MatchedGraph, Vertex
from core.surfaces import complement_cycles, normalize_solid, underlying_graph
from embed.colorings import Multicycle, is_multicycle

MATCH_COLOR = 3

FaceWalk = Tuple[Tuple[str, str], ...]


@dataclass(frozen=True)
class RibbonEmbedding:
    vertices: Tuple[Vertex, ...]
    twisted: FrozenSet[str]
    faces: Tuple[FaceWalk, ...]
    labels: Tuple[str, ...]
    orientable: bool
    euler_genus: int
    free_loops: Tuple[str, ...] = field(default=())

    @property
    def genus(self) -> int:
        """Orientable genus, or the crosscap number for non-orientable surfaces."""
        return self.euler_genus // 2 if self.orientable else self.euler_genus


def _rotations(g: MatchedGraph, dirs: CycleOrientation) -> Dict[str, Vertex]:
    """Rotation (matched end, incoming end, outgoing end) with cycles run along dirs."""
    out = {}
    for cycle in complement_cycles(g):
        for vid, (arrive, leave) in zip(cycle.vertices, cycle.steps):
            if dirs.is_reversed(cycle.key):
                arrive, leave = leave, arrive
            out[vid] = Vertex(vid, Decoration.SOLID, (g.matched_end_at(vid), arrive, leave))
    return out


def _trace(rotations: Dict[str, Vertex], owner: Dict[EdgeEnd, str],
           twisted: FrozenSet[str]) -> List[FaceWalk]:
    """Faces of a signed rotation system, each listed once regardless of direction."""
    faces: List[FaceWalk] = []
    seen_corners = set()
    for vid in sorted(rotations):
        v = rotations[vid]
        for h in v.rotation:
            corner = (vid, frozenset((h, v.successor(h))))
            if corner in seen_corners:
                continue
            walk = []
            start, sense = (h, 1), 1
            at, arrived = vid, h
            while True:
                vertex = rotations[at]
                out = vertex.successor(arrived, sense)
                seen_corners.add((at, frozenset((arrived, out))))
                walk.append((at, out.edge))
                if out.edge in twisted:
                    sense = -sense
                arrived = out.opposite()
                at = owner[arrived]
                if (arrived, sense) == start and at == vid:
                    break
            faces.append(tuple(walk))
    return faces


def _is_orientable(g: MatchedGraph, rotations: Dict[str, Vertex], twisted: FrozenSet[str]) -> bool:
    edges = [replace(e, twisted=e.id in twisted) for e in g.edges]
    candidate = MatchedGraph.build(rotations.values(), edges, g.free_loops)
    try:
        normalize_solid(candidate)
    except NonOrientableError:
        return False
    return True


def strong_embedding(g: MatchedGraph, c: Multicycle,
                     dirs: Optional[CycleOrientation] = None) -> RibbonEmbedding:
    """
    Embedding whose faces are the 1-2, 1-3 and 2-3 cycles of the Tait coloring.

    Checked before returning: every face is a simple cycle; complement faces
    and matched faces alternate across each unmatched edge; the two sides of
    every matched edge lie on distinct faces.
    """
    if not is_multicycle(g, c):
        raise ConstructionError("not a bicolored multicycle of this graph")
    dirs = dirs or CycleOrientation()
    color = dict(c.as_dict())
    color.update({e.id: MATCH_COLOR for e in g.matched_edges})

    rotations = _rotations(g, dirs)
    owner = {end: vid for vid, v in rotations.items() for end in v.rotation}

    twisted = set()
    for e in g.edges:
        u, v = g.endpoints(e.id)
        end_u, end_v = EdgeEnd(e.id, SIDE_A), EdgeEnd(e.id, SIDE_B)
        before = color[rotations[u].successor(end_u, -1).edge]
        after = color[rotations[v].successor(end_v).edge]
        if before != after:
            twisted.add(e.id)
    twisted = frozenset(twisted)

    faces = _trace(rotations, owner, twisted)
    labels = tuple("C" if MATCH_COLOR not in {color[eid] for _, eid in face} else "M" for face in faces)

    for face in faces:
        stops = [vid for vid, _ in face]
        if len(set(stops)) != len(stops):
            raise ConstructionError(f"face through {stops} is not a simple cycle")

    sides: Dict[str, List[int]] = {e.id: [] for e in g.edges}
    for k, face in enumerate(faces):
        for _, eid in face:
            sides[eid].append(k)
    for e in g.edges:
        first, second = sides[e.id]
        if e.matched and first == second:
            raise ConstructionError(f"matched edge {e.id} has the same face on both sides")
        if not e.matched and labels[first] == labels[second]:
            raise ConstructionError(f"edge {e.id} separates two faces labelled {labels[first]}")

    graph = underlying_graph(g).to_networkx()
    n_components = nx.number_connected_components(graph.subgraph(v.id for v in g.vertices))
    euler_genus = 2 * n_components - len(g.vertices) + len(g.edges) - len(faces)
    orientable = _is_orientable(g, rotations, twisted)
    logger.debug(f"strong embedding: {len(faces)} faces, Euler genus {euler_genus}, "
                 f"{'orientable' if orientable else 'non-orientable'}")
    return RibbonEmbedding(
        vertices=tuple(rotations[v.id] for v in g.vertices),
        twisted=twisted,
        faces=tuple(faces),
        labels=labels,
        orientable=orientable,
        euler_genus=euler_genus,
        free_loops=g.free_loops,
    )


def embedding_text(emb: RibbonEmbedding) -> str:
    lines = []
    for v in emb.vertices:
        lines.append(f"vertex {v.id} solid {' '.join(str(end) for end in v.rotation)}")
    for eid in sorted(emb.twisted):
        lines.append(f"twist {eid}")
    for lid in emb.free_loops:
        lines.append(f"loop {lid}")
    for k, face in enumerate(emb.faces):
        walk = " ".join(f"{vid} {eid}" for vid, eid in face)
        lines.append(f"face {k}: {walk} [{emb.labels[k]}]")
    lines.append(f"genus {emb.genus} orientable {'yes' if emb.orientable else 'no'}")
    return "\n".join(lines)
