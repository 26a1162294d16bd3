"""
Resolution states shared by every state sum and resolution cube.

A StateModel is a set of arcs and a list of sites; each site offers two ways
of joining four arc ends into two strands. Choosing one pairing per site
leaves a disjoint union of circles. Crossings of a Gauss code and matched
edges of a graph are both sites.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, List, Sequence, Tuple

from core.errors import SizeLimitError
from core.models import Sign
from utils.config import get_settings

Arc = Hashable
Pairing = Tuple[Tuple[Arc, Arc], Tuple[Arc, Arc]]


@dataclass(frozen=True)
class Site:
    id: str
    pairings: Tuple[Pairing, Pairing]


@dataclass(frozen=True)
class Resolution:
    state: int
    labels: Dict[Arc, int]
    n_circles: int
    strands: Tuple[Tuple[int, int], ...]

    def site_circles(self, index: int) -> Tuple[int, int]:
        """Circles carrying the two strands of a site in this state."""
        return self.strands[index]


class _UnionFind:
    def __init__(self, items: Sequence[Arc]):
        self.parent = {x: x for x in items}

    def find(self, x: Arc) -> Arc:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Arc, b: Arc) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class StateModel:
    arcs: Tuple[Arc, ...]
    sites: Tuple[Site, ...]

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    @cached_property
    def n_states(self) -> int:
        return 1 << self.n_sites

    def check_size(self, limit: int, what: str) -> None:
        if self.n_sites > limit:
            raise SizeLimitError(what, self.n_sites, limit)

    @staticmethod
    def bits(state: int, k: int) -> int:
        return (state >> k) & 1

    def resolve(self, state: int) -> Resolution:
        uf = _UnionFind(self.arcs)
        chosen = []
        for k, site in enumerate(self.sites):
            pairing = site.pairings[self.bits(state, k)]
            for a, b in pairing:
                uf.union(a, b)
            chosen.append(pairing)

        labels: Dict[Arc, int] = {}
        roots: Dict[Arc, int] = {}
        for arc in self.arcs:
            root = uf.find(arc)
            if root not in roots:
                roots[root] = len(roots)
            labels[arc] = roots[root]

        strands = tuple((labels[p[0][0]], labels[p[1][0]]) for p in chosen)
        return Resolution(state, labels, len(roots), strands)

    def ones(self, state: int) -> int:
        return bin(state).count("1")


def gauss_state_model(d) -> StateModel:
    """Sites are crossings in id order: pairing 0 is the A-smoothing, 1 the B-smoothing."""
    sites: List[Site] = []
    for cid in d.crossing_ids:
        ends = d.ends(cid)
        oriented = ((ends["over_in"], ends["under_out"]), (ends["under_in"], ends["over_out"]))
        against = ((ends["over_in"], ends["under_in"]), (ends["over_out"], ends["under_out"]))
        if d.sign(cid) is Sign.POSITIVE:
            sites.append(Site(str(cid), (oriented, against)))
        else:
            sites.append(Site(str(cid), (against, oriented)))
    return StateModel(tuple(d.segments()), tuple(sites))


PARALLEL, CROSS = 0, 1


def graph_smoothings(g, eid: str) -> Tuple[Pairing, Pairing]:
    """(parallel, cross) pairings of the unmatched edges around a matched edge."""
    u, v = g.endpoints(eid)
    x1, x2 = g.unmatched_ends(u)
    y1, y2 = g.unmatched_ends(v)
    parallel = ((x1.edge, y2.edge), (x2.edge, y1.edge))
    cross = ((x1.edge, y1.edge), (x2.edge, y2.edge))
    return parallel, cross


def graph_state_model(g, signed: bool = False) -> StateModel:
    """
    Sites are matched edges in id order on a normalized graph.

    Unsigned: pairing 0 is parallel, 1 is cross. Signed: negative edges swap
    the two, matching the A/B roles of the crossing they become.
    """
    sites: List[Site] = []
    for e in g.matched_edges:
        parallel, cross = graph_smoothings(g, e.id)
        if signed and e.match.sign is Sign.NEGATIVE:
            sites.append(Site(e.id, (cross, parallel)))
        else:
            sites.append(Site(e.id, (parallel, cross)))
    arcs = tuple(e.id for e in g.unmatched_edges) + tuple(g.free_loops)
    return StateModel(arcs, tuple(sites))


def default_state_limit() -> int:
    return get_settings().state_limit
