"""
Data model for matched graphs (graphene diagrams) and signed Gauss codes.

This module demonstrates understanding of:
- Rotation systems as cyclically ordered edge-ends per vertex
- Directed signed perfect matchings on trivalent ribbon graphs
- Virtual link diagrams quotiented to over/under pass sequences
- Immutable value types shared freely between threads
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel

from core.errors import InvariantError

SIDE_A = "a"
SIDE_B = "b"


class Sign(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    @property
    def unit(self) -> int:
        return 1 if self is Sign.POSITIVE else -1

    def flipped(self) -> "Sign":
        return Sign.NEGATIVE if self is Sign.POSITIVE else Sign.POSITIVE

    @classmethod
    def of(cls, positive: bool) -> "Sign":
        return cls.POSITIVE if positive else cls.NEGATIVE


class Decoration(str, Enum):
    SOLID = "solid"
    HOLLOW = "hollow"

    def toggled(self) -> "Decoration":
        return Decoration.HOLLOW if self is Decoration.SOLID else Decoration.SOLID


class Strand(str, Enum):
    OVER = "O"
    UNDER = "U"

    def other(self) -> "Strand":
        return Strand.UNDER if self is Strand.OVER else Strand.OVER


class EdgeEnd(NamedTuple):
    edge: str
    side: str

    def opposite(self) -> "EdgeEnd":
        return EdgeEnd(self.edge, SIDE_B if self.side == SIDE_A else SIDE_A)

    def __str__(self) -> str:
        return f"{self.edge}.{self.side}"


@dataclass(frozen=True)
class Vertex:
    id: str
    decoration: Decoration
    rotation: Tuple[EdgeEnd, ...]

    def successor(self, end: EdgeEnd, step: int = 1) -> EdgeEnd:
        idx = self.rotation.index(end)
        return self.rotation[(idx + step) % len(self.rotation)]

    def starting_at(self, end: EdgeEnd) -> Tuple[EdgeEnd, ...]:
        idx = self.rotation.index(end)
        return self.rotation[idx:] + self.rotation[:idx]

    def reversed(self) -> "Vertex":
        """Same vertex with its cyclic order reversed (first end kept in place)."""
        first, *rest = self.rotation
        return replace(self, rotation=(first, *reversed(rest)))

    def flipped(self) -> "Vertex":
        """M5: view the disc from the other side."""
        return replace(self.reversed(), decoration=self.decoration.toggled())


@dataclass(frozen=True)
class MatchData:
    sign: Sign
    dot: str = SIDE_A


@dataclass(frozen=True)
class Edge:
    id: str
    match: Optional[MatchData] = None
    twisted: bool = False

    @property
    def matched(self) -> bool:
        return self.match is not None


@dataclass(frozen=True)
class MatchedGraph:
    """
    Trivalent ribbon graph with vertex decorations and a directed signed
    perfect matching. Vertex-free loops model the components of the ungraph.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    free_loops: Tuple[str, ...] = ()
    z_flag: bool = False

    @classmethod
    def build(cls, vertices: Iterable[Vertex], edges: Iterable[Edge],
              free_loops: Iterable[str] = (), z_flag: bool = False) -> "MatchedGraph":
        return cls(
            vertices=tuple(sorted(vertices, key=lambda v: v.id)),
            edges=tuple(sorted(edges, key=lambda e: e.id)),
            free_loops=tuple(sorted(free_loops)),
            z_flag=z_flag,
        )

    @cached_property
    def vertex_map(self) -> Dict[str, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_map(self) -> Dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def end_owner(self) -> Dict[EdgeEnd, str]:
        owner = {}
        for v in self.vertices:
            for end in v.rotation:
                owner[end] = v.id
        return owner

    def vertex(self, vid: str) -> Vertex:
        return self.vertex_map[vid]

    def edge(self, eid: str) -> Edge:
        return self.edge_map[eid]

    def owner(self, end: EdgeEnd) -> str:
        return self.end_owner[end]

    def endpoints(self, eid: str) -> Tuple[str, str]:
        return self.owner(EdgeEnd(eid, SIDE_A)), self.owner(EdgeEnd(eid, SIDE_B))

    @property
    def matched_edges(self) -> List[Edge]:
        return [e for e in self.edges if e.matched]

    @property
    def unmatched_edges(self) -> List[Edge]:
        return [e for e in self.edges if not e.matched]

    def matched_end_at(self, vid: str) -> EdgeEnd:
        for end in self.vertex(vid).rotation:
            if self.edge(end.edge).matched:
                return end
        raise KeyError(f"vertex {vid} has no matched edge")

    def unmatched_ends(self, vid: str) -> Tuple[EdgeEnd, EdgeEnd]:
        """(x1, x2): the unmatched ends in rotation order after the matched end."""
        rot = self.vertex(vid).starting_at(self.matched_end_at(vid))
        return rot[1], rot[2]

    def other_unmatched_end(self, vid: str, end: EdgeEnd) -> EdgeEnd:
        x1, x2 = self.unmatched_ends(vid)
        return x2 if end == x1 else x1

    def is_normalized(self) -> bool:
        return (all(v.decoration is Decoration.SOLID for v in self.vertices)
                and not any(e.twisted for e in self.edges))

    def with_vertices(self, updated: Dict[str, Vertex]) -> "MatchedGraph":
        return MatchedGraph.build(
            [updated.get(v.id, v) for v in self.vertices], self.edges, self.free_loops, self.z_flag
        )

    def with_edges(self, updated: Dict[str, Edge]) -> "MatchedGraph":
        return MatchedGraph.build(
            self.vertices, [updated.get(e.id, e) for e in self.edges], self.free_loops, self.z_flag
        )


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: Sign


@dataclass(frozen=True)
class Pass:
    crossing: int
    strand: Strand

    def token(self, sign: Sign) -> str:
        return f"{self.strand.value}{self.crossing}{sign.value}"


Segment = Tuple[int, int]


@dataclass(frozen=True)
class GaussCode:
    """
    Signed Gauss code: one cyclic pass sequence per component.

    Segment (i, j) runs from pass j of component i to pass j+1; a component
    without passes is a single crossing-free circle, segment (i, 0).
    """

    crossings: Tuple[Crossing, ...]
    components: Tuple[Tuple[Pass, ...], ...]

    @classmethod
    def build(cls, components: Sequence[Sequence[Pass]], signs: Dict[int, Sign]) -> "GaussCode":
        return cls(
            crossings=tuple(Crossing(c, signs[c]) for c in sorted(signs)),
            components=tuple(tuple(comp) for comp in components),
        )

    @cached_property
    def sign_map(self) -> Dict[int, Sign]:
        return {c.id: c.sign for c in self.crossings}

    @cached_property
    def positions(self) -> Dict[Tuple[int, Strand], Tuple[int, int]]:
        where = {}
        for i, comp in enumerate(self.components):
            for j, p in enumerate(comp):
                where[(p.crossing, p.strand)] = (i, j)
        return where

    def sign(self, crossing: int) -> Sign:
        return self.sign_map[crossing]

    @property
    def crossing_ids(self) -> List[int]:
        return [c.id for c in self.crossings]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def segments(self) -> List[Segment]:
        out = []
        for i, comp in enumerate(self.components):
            out.extend((i, j) for j in range(max(len(comp), 1)))
        return out

    def ends(self, crossing: int) -> Dict[str, Segment]:
        """Incoming/outgoing segments of both strands at a crossing."""
        oi, oj = self.positions[(crossing, Strand.OVER)]
        ui, uj = self.positions[(crossing, Strand.UNDER)]
        no, nu = len(self.components[oi]), len(self.components[ui])
        return {
            "over_in": (oi, (oj - 1) % no),
            "over_out": (oi, oj),
            "under_in": (ui, (uj - 1) % nu),
            "under_out": (ui, uj),
        }

    def next_crossing_id(self) -> int:
        return max(self.crossing_ids, default=0) + 1


def reverse_component(d: GaussCode, index: int) -> GaussCode:
    """Reverse one component; crossings it shares with other components change sign."""
    comp = d.components[index]
    own = {p.crossing for p in comp}
    mixed = {c for c in own if sum(1 for p in comp if p.crossing == c) == 1}
    components = list(d.components)
    components[index] = tuple(reversed(comp))
    signs = {c.id: (c.sign.flipped() if c.id in mixed else c.sign) for c in d.crossings}
    return GaussCode.build(components, signs)


@dataclass(frozen=True)
class CycleOrientation:
    """Traversal sense per complement cycle / free loop, as reversals of the default."""

    reversed_keys: FrozenSet[str] = field(default_factory=frozenset)

    def is_reversed(self, key: str) -> bool:
        return key in self.reversed_keys

    @classmethod
    def from_keys(cls, keys: Iterable[str]) -> "CycleOrientation":
        return cls(frozenset(keys))


@dataclass(frozen=True)
class TrivalentGraph:
    """Abstract graph underlying a matched graph: edges are (id, u, v) triples."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, str], ...]
    free_loops: int = 0

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for eid, u, v in self.edges:
            graph.add_edge(u, v, key=eid)
        # Free loops become isolated two-vertex cycles so isomorphism still counts them
        for k in range(self.free_loops):
            node = ("loop", k)
            graph.add_edge(node, node, key=f"loop{k}")
        return graph

    def incident(self) -> Dict[str, List[str]]:
        inc: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for eid, u, v in self.edges:
            inc[u].append(eid)
            inc[v].append(eid)
        return inc


class Violation(BaseModel):
    code: str
    message: str
    ids: List[str] = []


class ValidationReport(BaseModel):
    violations: List[Violation] = []

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, *ids: str) -> None:
        self.violations.append(Violation(code=code, message=message, ids=[str(i) for i in ids]))

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(f"{v.code}: {v.message}" for v in self.violations)

    def raise_if_invalid(self) -> None:
        if not self.ok:
            raise InvariantError(self)
