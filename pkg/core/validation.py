"""
Invariant checks for matched graphs and Gauss codes.
Every constructor path (parsers, functors, moves) funnels through here.
"""

from collections import Counter

from core.models import (SIDE_A, SIDE_B, EdgeEnd, GaussCode, MatchedGraph, Strand,
                         ValidationReport)


def validate_matched_graph(g: MatchedGraph) -> ValidationReport:
    report = ValidationReport()

    vertex_ids = Counter(v.id for v in g.vertices)
    edge_ids = Counter(e.id for e in g.edges)
    loop_ids = Counter(g.free_loops)
    for ids, kind in ((vertex_ids, "vertex"), (edge_ids, "edge"), (loop_ids, "loop")):
        for name, count in ids.items():
            if count > 1:
                report.add("duplicate_id", f"{kind} id '{name}' declared {count} times", name)
    for name in set(edge_ids) & set(loop_ids):
        report.add("duplicate_id", f"'{name}' is both an edge and a loop", name)

    seen = Counter()
    for v in g.vertices:
        if len(v.rotation) != 3 or len(set(v.rotation)) != 3:
            report.add("rotation_arity", f"vertex {v.id} must list 3 distinct edge-ends", v.id)
        for end in v.rotation:
            seen[end] += 1
            if end.edge not in edge_ids:
                report.add("unknown_edge", f"vertex {v.id} refers to undeclared edge {end.edge}",
                           v.id, end.edge)
            if end.side not in (SIDE_A, SIDE_B):
                report.add("bad_end", f"vertex {v.id} uses end '{end}'", v.id)

    for e in g.edges:
        for side in (SIDE_A, SIDE_B):
            end = EdgeEnd(e.id, side)
            if seen[end] == 0:
                report.add("missing_end", f"edge-end {end} is not in any rotation", e.id)
            elif seen[end] > 1:
                report.add("duplicate_end", f"edge-end {end} appears in {seen[end]} rotations", e.id)
        if e.match is not None and e.match.dot not in (SIDE_A, SIDE_B):
            report.add("bad_dot", f"matched edge {e.id} has dot '{e.match.dot}'", e.id)

    if not report.ok:
        return report

    for e in g.matched_edges:
        u, v = g.endpoints(e.id)
        if u == v:
            report.add("matched_self_loop", f"matched edge {e.id} is a loop at {u}", e.id)

    for v in g.vertices:
        matched = [end for end in v.rotation if g.edge(end.edge).matched]
        if len(matched) != 1:
            report.add("matching_not_perfect",
                       f"matching not perfect: vertex {v.id} meets {len(matched)} matched edges", v.id)

    if report.ok:
        # Trivalence plus a perfect matching leaves two unmatched ends per vertex
        for v in g.vertices:
            unmatched = [end for end in v.rotation if not g.edge(end.edge).matched]
            if len(unmatched) != 2:
                report.add("complement_not_cycles",
                           f"vertex {v.id} has {len(unmatched)} unmatched ends", v.id)
    return report


def validate_gauss_code(d: GaussCode) -> ValidationReport:
    report = ValidationReport()
    declared = Counter(c.id for c in d.crossings)
    for cid, count in declared.items():
        if count > 1:
            report.add("duplicate_id", f"crossing {cid} declared {count} times", str(cid))

    uses = Counter()
    for comp in d.components:
        for p in comp:
            uses[(p.crossing, p.strand)] += 1
            if p.crossing not in declared:
                report.add("unknown_crossing", f"pass through undeclared crossing {p.crossing}",
                           str(p.crossing))

    for cid in declared:
        over, under = uses[(cid, Strand.OVER)], uses[(cid, Strand.UNDER)]
        if over != 1 or under != 1:
            report.add("crossing_passes",
                       f"crossing {cid} has {over} over and {under} under passes (need 1 and 1)",
                       str(cid))
    return report
