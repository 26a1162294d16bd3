"""
Reference diagrams
Hand-entered matched graphs and Gauss codes used by the test-suite and the
command line, plus a seeded generator of random matched graphs.
"""

import random
from typing import Dict, List

from core.codecs import parse_gauss_code, parse_matched_graph
from core.models import (SIDE_A, SIDE_B, Decoration, Edge, EdgeEnd, GaussCode, MatchData,
                         MatchedGraph, Sign, Vertex)
from core.validation import validate_matched_graph

MATCHED_GRAPH_TEXTS: Dict[str, str] = {
    "THETA": """
vertex u solid e1.a e2.a e3.a
vertex v solid e1.b e3.b e2.b
medge e1 + a
edge e2
edge e3
""",
    "UNGRAPH1": """
loop l1
""",
    # Cube drawn as two concentric squares joined by four matched spokes
    "CUBEQ3": """
vertex t0 solid m0.a t01.a t30.b
vertex t1 solid m1.a t12.a t01.b
vertex t2 solid m2.a t23.a t12.b
vertex t3 solid m3.a t30.a t23.b
vertex b0 solid m0.b b30.b b01.a
vertex b1 solid m1.b b01.b b12.a
vertex b2 solid m2.b b12.b b23.a
vertex b3 solid m3.b b23.b b30.a
medge m0 + a
medge m1 + a
medge m2 + a
medge m3 + a
edge t01
edge t12
edge t23
edge t30
edge b01
edge b12
edge b23
edge b30
""",
    # K4 as a triangle o0 o1 o2 around a centre c
    "K4M": """
vertex c solid m1.a e1.a e2.a
vertex o0 solid m1.b e4.a e3.a
vertex o1 solid m2.a e1.b e3.b
vertex o2 solid m2.b e4.b e2.b
medge m1 + a
medge m2 + a
edge e1
edge e2
edge e3
edge e4
""",
    # Outer pentagon, inner pentagram, matched spokes
    "PETERSEN": """
vertex o0 solid s0.a o40.b o01.a
vertex o1 solid s1.a o01.b o12.a
vertex o2 solid s2.a o12.b o23.a
vertex o3 solid s3.a o23.b o34.a
vertex o4 solid s4.a o34.b o40.a
vertex i0 solid s0.b i30.b i02.a
vertex i1 solid s1.b i41.b i13.a
vertex i2 solid s2.b i02.b i24.a
vertex i3 solid s3.b i13.b i30.a
vertex i4 solid s4.b i24.b i41.a
medge s0 + a
medge s1 + a
medge s2 + a
medge s3 + a
medge s4 + a
edge o01
edge o12
edge o23
edge o34
edge o40
edge i02
edge i24
edge i41
edge i13
edge i30
""",
    # Franklin graph on a 12-cycle; hollow vertices carry the negative crossings' twists
    "FRANKLIN": """
vertex p00_000 solid m001.b a00_011.b a00_000.a
vertex p00_001 solid m002.a a00_000.b a00_001.a
vertex p00_002 solid m003.a a00_001.b a00_002.a
vertex p00_003 solid m004.a a00_002.b a00_003.a
vertex p00_004 solid m005.a a00_003.b a00_004.a
vertex p00_005 solid m001.a a00_004.b a00_005.a
vertex p00_006 solid m006.a a00_005.b a00_006.a
vertex p00_007 hollow m003.b a00_006.b a00_007.a
vertex p00_008 solid m002.b a00_007.b a00_008.a
vertex p00_009 hollow m005.b a00_008.b a00_009.a
vertex p00_010 solid m004.b a00_009.b a00_010.a
vertex p00_011 hollow m006.b a00_010.b a00_011.a
medge m001 + a
medge m002 + a
medge m003 + a
medge m004 + a
medge m005 + a
medge m006 + a
edge a00_000
edge a00_001
edge a00_002
edge a00_003
edge a00_004
edge a00_005
edge a00_006
edge a00_007
edge a00_008
edge a00_009
edge a00_010
edge a00_011
""",
    # Hexagon with its three long diagonals matched: K3,3
    "K33TREF": """
vertex p00_000 solid m001.a a00_005.b a00_000.a
vertex p00_001 solid m002.b a00_000.b a00_001.a
vertex p00_002 solid m003.a a00_001.b a00_002.a
vertex p00_003 solid m001.b a00_002.b a00_003.a
vertex p00_004 solid m002.a a00_003.b a00_004.a
vertex p00_005 solid m003.b a00_004.b a00_005.a
medge m001 + a
medge m002 + a
medge m003 + a
edge a00_000
edge a00_001
edge a00_002
edge a00_003
edge a00_004
edge a00_005
""",
    # K4 on a 4-cycle with both diagonals matched, both crossings negative
    "EMBED_EXAMPLE": """
vertex p00_000 solid m001.a a00_003.b a00_000.a
vertex p00_001 solid m002.a a00_000.b a00_001.a
vertex p00_002 solid m001.b a00_002.a a00_001.b
vertex p00_003 solid m002.b a00_003.a a00_002.b
medge m001 + a
medge m002 + a
edge a00_000
edge a00_001
edge a00_002
edge a00_003
""",
    # Two K4-minus-an-edge pieces joined by the 2-edge cut {c0, c1}
    "TWOCUT": """
vertex l0 solid c0.a l02.a l03.a
vertex l1 solid c1.a l13.a l12.a
vertex l2 solid l23.a l02.b l12.b
vertex l3 solid l03.b l23.b l13.b
vertex r0 solid c0.b r03.a r02.a
vertex r1 solid r12.a r13.a c1.b
vertex r2 solid r02.b r23.a r12.b
vertex r3 solid r23.b r03.b r13.b
medge l02 + a
medge l13 + a
medge r02 + a
medge r13 + a
edge c0
edge c1
edge l03
edge l12
edge l23
edge r03
edge r12
edge r23
""",
    # Two digons joined by the unmatched 2-edge cut {s, t}
    "DIGONS": """
vertex a solid m1.a p.a s.a
vertex b solid m1.b t.a p.b
vertex c solid m2.a s.b q.a
vertex d solid m2.b q.b t.b
medge m1 + a
medge m2 + a
edge p
edge q
edge s
edge t
""",
}

GAUSS_CODE_TEXTS: Dict[str, str] = {
    "TREFOIL": "component: O1+ U2+ O3+ U1+ O2+ U3+\n",
    "HOPF2": "component: O1+ O2+\ncomponent: U1+ U2+\n",
    "UNKNOT0": "component:\n",
    "FRANKLIN_CODE": "component: U1+ O2+ O3- O4+ O5- O1+ O6- U3- U2+ U5- U4+ U6-\n",
    "EMBED_CODE": "component: O1- O2- U1- U2-\n",
    # One crossing shared by two components: not even
    "ODD_LINK": "component: O1+\ncomponent: U1+\n",
}

FLIP_REGION = ("l0", "l1", "l2", "l3")
DIGON_REGION = ("a", "b")


def matched_graph_fixture(name: str) -> MatchedGraph:
    return parse_matched_graph(MATCHED_GRAPH_TEXTS[name])


def gauss_code_fixture(name: str) -> GaussCode:
    return parse_gauss_code(GAUSS_CODE_TEXTS[name])


def _split_into_cycles(rng: random.Random, items: List[str]) -> List[List[str]]:
    rng.shuffle(items)
    cycles, i = [], 0
    while i < len(items):
        size = rng.randint(1, min(6, len(items) - i))
        cycles.append(items[i:i + size])
        i += size
    return cycles


def random_matched_graph(rng: random.Random, n_matched: int, hollow_rate: float = 0.3,
                         twist_rate: float = 0.3, loop_rate: float = 0.2) -> MatchedGraph:
    """
    Random orientable matched graph with n_matched matched edges.

    Twists are placed on the cut of a random vertex set, so the result always
    normalizes; hollow vertices are sprinkled independently.
    """
    vids = [f"v{k:02d}" for k in range(2 * n_matched)]
    rotations: Dict[str, List[EdgeEnd]] = {vid: [] for vid in vids}
    edges: List[Edge] = []
    owner: Dict[EdgeEnd, str] = {}

    for k in range(n_matched):
        eid = f"m{k:02d}"
        u, v = vids[2 * k], vids[2 * k + 1]
        if rng.random() < 0.5:
            u, v = v, u
        sign = Sign.of(rng.random() < 0.6)
        edges.append(Edge(eid, MatchData(sign, rng.choice((SIDE_A, SIDE_B)))))
        rotations[u].append(EdgeEnd(eid, SIDE_A))
        rotations[v].append(EdgeEnd(eid, SIDE_B))
        owner[EdgeEnd(eid, SIDE_A)], owner[EdgeEnd(eid, SIDE_B)] = u, v

    count = 0
    for cycle in _split_into_cycles(rng, list(vids)):
        for i, u in enumerate(cycle):
            v = cycle[(i + 1) % len(cycle)]
            eid = f"e{count:02d}"
            count += 1
            edges.append(Edge(eid))
            rotations[u].append(EdgeEnd(eid, SIDE_A))
            rotations[v].append(EdgeEnd(eid, SIDE_B))
            owner[EdgeEnd(eid, SIDE_A)], owner[EdgeEnd(eid, SIDE_B)] = u, v

    side = {vid: rng.random() < twist_rate for vid in vids}
    edges = [Edge(e.id, e.match, side[owner[EdgeEnd(e.id, SIDE_A)]] != side[owner[EdgeEnd(e.id, SIDE_B)]])
             for e in edges]

    vertices = []
    for vid in vids:
        rot = rotations[vid]
        rng.shuffle(rot)
        decoration = Decoration.HOLLOW if rng.random() < hollow_rate else Decoration.SOLID
        vertices.append(Vertex(vid, decoration, tuple(rot)))

    loops = [f"l{k}" for k in range(2) if rng.random() < loop_rate]
    g = MatchedGraph.build(vertices, edges, loops)
    validate_matched_graph(g).raise_if_invalid()
    return g
