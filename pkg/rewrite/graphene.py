"""
Graphene moves on matched graphs.

G1/G2/G3 are realized by conjugation through the functor: the matched graph
is sent to its Gauss code, one R1/R2/R3 move is applied there, and the result
is brought back with K inverse. G4, G5 and M5 rewrite decorations and signs in
place; FLIP reverses the rotations of a region attached by at most two
unmatched edges. Graphs are compared by a canonical key of their normalized
form, which also drives the breadth-first search over graphene moves.
"""

from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Set, Tuple

from loguru import logger

from core.errors import GenusError, PatternMismatchError, ReplayError
from core.models import SIDE_A, SIDE_B, EdgeEnd, MatchData, MatchedGraph
from core.surfaces import genus, normalize_solid
from functor.kmap import k_inverse, k_map
from rewrite.reidemeister import MoveName, MoveStep, apply_move, iter_moves
from rewrite.search import MoveTrace, SearchBudget, SearchOutcome

CONJUGATED = {
    MoveName.G1: (MoveName.R1_PLUS, MoveName.R1_MINUS),
    MoveName.G2: (MoveName.R2_PLUS, MoveName.R2_MINUS),
    MoveName.G3: (MoveName.R3,),
}


def _conjugated_site(step: MoveStep) -> str:
    return f"{step.move.value}:{step.site}"


def _parse_conjugated_site(site: str) -> MoveStep:
    name, sep, rest = site.partition(":")
    if not sep:
        raise PatternMismatchError(f"site '{site}' is not of the form <R-move>:<site>")
    try:
        return MoveStep(MoveName(name), rest)
    except ValueError:
        raise PatternMismatchError(f"unknown Reidemeister move '{name}'")


def graphene_neighbors(g: MatchedGraph, move: MoveName,
                       max_crossings: Optional[int] = None) -> List[Tuple[MatchedGraph, MoveStep]]:
    """Every G1/G2/G3 application, each labelled with its conjugated site."""
    allowed = CONJUGATED[move]
    out = []
    for code, step in iter_moves(k_map(g)):
        if step.move not in allowed:
            continue
        if max_crossings is not None and code.n_crossings > max_crossings:
            continue
        out.append((k_inverse(code), MoveStep(move, _conjugated_site(step))))
    return out


def _toggle(g: MatchedGraph, vid: str) -> MatchedGraph:
    v = g.vertex(vid)
    return g.with_vertices({vid: replace(v, decoration=v.decoration.toggled())})


def graphene_move(g: MatchedGraph, move: MoveName, site: str) -> MatchedGraph:
    if move in CONJUGATED:
        step = _parse_conjugated_site(site)
        if step.move not in CONJUGATED[move]:
            raise PatternMismatchError(f"{move.value} is realized by {CONJUGATED[move]}, not {step.move.value}")
        code = apply_move(k_map(g), step)
        if code is None:
            raise PatternMismatchError(f"{step} does not apply to K of the graph")
        return k_inverse(code)

    if move is MoveName.G4:
        if site not in g.edge_map or not g.edge(site).matched:
            raise PatternMismatchError(f"G4 needs a matched edge, got '{site}'")
        u, v = g.endpoints(site)
        return _toggle(_toggle(g, u), v)

    if move is MoveName.G5:
        eid, _, side = site.partition(".")
        if eid not in g.edge_map or not g.edge(eid).matched or side not in (SIDE_A, SIDE_B):
            raise PatternMismatchError(f"G5 needs a matched edge end, got '{site}'")
        e = g.edge(eid)
        flipped = g.with_edges({eid: replace(e, match=MatchData(e.match.sign.flipped(), e.match.dot))})
        return _toggle(flipped, g.owner(EdgeEnd(eid, side)))

    if move is MoveName.M5:
        if site not in g.vertex_map:
            raise PatternMismatchError(f"M5 needs a vertex, got '{site}'")
        return g.with_vertices({site: g.vertex(site).flipped()})

    if move is MoveName.FLIP:
        return flip_region(g, [v for v in site.split(",") if v])

    raise PatternMismatchError(f"{move.value} is not a graphene move")


def region_cut(g: MatchedGraph, region: Iterable[str]) -> List[str]:
    """Unmatched edges with exactly one endpoint in the region."""
    inside = set(region)
    cut = []
    for e in g.unmatched_edges:
        u, v = g.endpoints(e.id)
        if (u in inside) != (v in inside):
            cut.append(e.id)
    return cut


def flip_region(g: MatchedGraph, region: Iterable[str]) -> MatchedGraph:
    """0-, 1- or 2-flip: reverse every rotation inside a region cut off by at most two unmatched edges."""
    region = sorted(set(region))
    unknown = [v for v in region if v not in g.vertex_map]
    if unknown:
        raise PatternMismatchError(f"unknown vertices {unknown}")
    h = normalize_solid(g)
    if genus(h) != 0:
        raise GenusError("flip moves need a genus-0 diagram")
    cut = region_cut(h, region)
    if len(cut) > 2:
        raise PatternMismatchError(
            f"region is attached by {len(cut)} unmatched edges ({', '.join(cut)}); at most 2 allowed")

    out = h.with_vertices({vid: h.vertex(vid).reversed() for vid in region})
    if genus(out) != 0:
        raise GenusError("flip produced a nonzero genus diagram")
    logger.debug(f"{len(cut)}-flip of {len(region)} vertices")
    return out


def replay_graph_trace(g: MatchedGraph, trace: MoveTrace) -> MatchedGraph:
    current = g
    for k, step in enumerate(trace.steps, start=1):
        try:
            current = graphene_move(current, step.move, step.site)
        except PatternMismatchError as exc:
            raise ReplayError(str(exc), k)
    return current


def _read_component(h: MatchedGraph, start: EdgeEnd) -> Tuple[List[str], Tuple]:
    """Vertices of the component of start in discovery order, and its dart table read from start."""
    order: Dict[str, int] = {h.owner(start): 0}
    rotations = [h.vertex(h.owner(start)).starting_at(start)]
    k = 0
    while k < len(rotations):
        for end in rotations[k]:
            opp = end.opposite()
            w = h.owner(opp)
            if w not in order:
                order[w] = len(rotations)
                rotations.append(h.vertex(w).starting_at(opp))
        k += 1

    label = {end: (i, j) for i, rot in enumerate(rotations) for j, end in enumerate(rot)}
    table = []
    for rot in rotations:
        for end in rot:
            e = h.edge(end.edge)
            tag = ""
            if e.matched:
                tag = e.match.sign.value + ("*" if e.match.dot == end.side else "")
            table.append((label[end.opposite()], tag))
    return list(order), tuple(table)


def canonical_graph(g: MatchedGraph) -> str:
    """
    Key of the normalized graph up to relabeling of vertices and edges.

    Each component is read breadth-first from every dart and the smallest
    table wins. Rotation senses are kept, so a mirror image gets its own key.
    """
    h = normalize_solid(g)
    seen: Set[str] = set()
    parts = []
    for v in h.vertices:
        if v.id in seen:
            continue
        component, _ = _read_component(h, v.rotation[0])
        seen.update(component)
        darts = [end for vid in component for end in h.vertex(vid).rotation]
        parts.append(min(_read_component(h, end)[1] for end in darts))
    return repr((tuple(sorted(parts)), len(h.free_loops), h.z_flag))


def graph_move_neighbors(g: MatchedGraph,
                         max_matched: Optional[int] = None) -> List[Tuple[MatchedGraph, MoveStep]]:
    """G4, G5 and M5 at every site, then the conjugated G1/G2/G3 moves."""
    out = []
    for e in g.matched_edges:
        out.append((graphene_move(g, MoveName.G4, e.id), MoveStep(MoveName.G4, e.id)))
    for e in g.matched_edges:
        for side in (SIDE_A, SIDE_B):
            site = f"{e.id}.{side}"
            out.append((graphene_move(g, MoveName.G5, site), MoveStep(MoveName.G5, site)))
    for v in g.vertices:
        out.append((graphene_move(g, MoveName.M5, v.id), MoveStep(MoveName.M5, v.id)))
    for move in CONJUGATED:
        out.extend(graphene_neighbors(g, move, max_matched))
    return out


def _graph_trace(parents: Dict[str, Optional[Tuple[str, MoveStep]]], key: str) -> MoveTrace:
    steps = []
    while parents[key] is not None:
        key, step = parents[key]
        steps.append(step)
    return MoveTrace(tuple(reversed(steps)))


def graphs_equivalent_within(g1: MatchedGraph, g2: MatchedGraph,
                             budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """
    Breadth-first search for graphene moves taking g1 to a graph with the key of g2.

    The returned trace replays from g1 with replay_graph_trace. Matched-edge
    counts are capped like crossing counts in the Gauss-code search.
    """
    budget = budget or SearchBudget()
    cap = budget.max_crossings
    if cap is None:
        cap = max(len(g1.matched_edges), len(g2.matched_edges))

    start, target = canonical_graph(g1), canonical_graph(g2)
    if start == target:
        return SearchOutcome(True, MoveTrace(), nodes=1, max_crossings=cap)

    parents: Dict[str, Optional[Tuple[str, MoveStep]]] = {start: None}
    frontier = [(start, g1)]
    nodes = 1
    for depth in range(1, budget.max_depth + 1):
        next_frontier = []
        for key, g in frontier:
            for h, step in graph_move_neighbors(g, cap):
                hkey = canonical_graph(h)
                if hkey in parents:
                    continue
                parents[hkey] = (key, step)
                nodes += 1
                if hkey == target:
                    trace = _graph_trace(parents, hkey)
                    logger.info(f"🔍 graphene equivalence found: {len(trace)} moves, {nodes} nodes")
                    return SearchOutcome(True, trace, nodes=nodes, max_crossings=cap)
                if nodes > budget.max_nodes:
                    logger.info(f"🔍 graphene search stopped at {nodes} nodes")
                    return SearchOutcome(False, reason="node budget exhausted", nodes=nodes,
                                         max_crossings=cap)
                next_frontier.append((hkey, h))
        if not next_frontier:
            return SearchOutcome(False, reason="move graph exhausted", nodes=nodes, max_crossings=cap)
        frontier = next_frontier
        logger.debug(f"graphene search: depth={depth} frontier={len(frontier)}")

    return SearchOutcome(False, reason=f"depth budget {budget.max_depth} exhausted", nodes=nodes,
                         max_crossings=cap)
