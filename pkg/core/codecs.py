"""
Text codecs
Line-based readers and writers for matched graphs and signed Gauss codes.

This module demonstrates understanding of:
- Comment-tolerant line grammars with precise error positions
- Deterministic serialization (byte-stable across runs)
- Validation on every constructor path
"""

import re
from typing import Dict, List, Tuple

from core.errors import ParseError
from core.models import (SIDE_A, SIDE_B, Decoration, Edge, EdgeEnd, GaussCode, MatchData,
                         MatchedGraph, Pass, Sign, Strand, Vertex)
from core.validation import validate_gauss_code, validate_matched_graph

PASS_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")
END_TOKEN = re.compile(r"^([A-Za-z0-9_]+)\.([ab])$")
ID_TOKEN = re.compile(r"^[A-Za-z0-9_]+$")
TWIST_MARK = "~"


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _column(raw: str, token: str) -> int:
    idx = raw.find(token)
    return idx + 1 if idx >= 0 else 1


def _check_id(token: str, raw: str, lineno: int) -> str:
    if not ID_TOKEN.match(token):
        raise ParseError(f"bad identifier '{token}'", lineno, _column(raw, token))
    return token


def parse_matched_graph(text: str) -> MatchedGraph:
    """Parse the matched-graph line format and validate the result."""
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    loops: List[str] = []
    z_flag = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        fields = line.split()
        keyword, args = fields[0], fields[1:]

        if keyword == "vertex":
            if len(args) != 5:
                raise ParseError("vertex needs an id, a decoration and three ends", lineno, 1)
            vid = _check_id(args[0], raw, lineno)
            try:
                decoration = Decoration(args[1])
            except ValueError:
                raise ParseError(f"unknown decoration '{args[1]}'", lineno, _column(raw, args[1]))
            ends = []
            for token in args[2:]:
                m = END_TOKEN.match(token)
                if not m:
                    raise ParseError(f"bad edge-end '{token}'", lineno, _column(raw, token))
                ends.append(EdgeEnd(m.group(1), m.group(2)))
            vertices.append(Vertex(vid, decoration, tuple(ends)))

        elif keyword == "edge":
            if len(args) not in (1, 2) or (len(args) == 2 and args[1] != TWIST_MARK):
                raise ParseError("edge takes an id and an optional '~'", lineno, 1)
            edges.append(Edge(_check_id(args[0], raw, lineno), twisted=len(args) == 2))

        elif keyword == "medge":
            if len(args) not in (3, 4) or (len(args) == 4 and args[3] != TWIST_MARK):
                raise ParseError("medge takes an id, a sign, a dotted end and an optional '~'",
                                 lineno, 1)
            eid = _check_id(args[0], raw, lineno)
            if args[1] not in ("+", "-"):
                raise ParseError(f"bad sign '{args[1]}'", lineno, _column(raw, args[1]))
            if args[2] not in (SIDE_A, SIDE_B):
                raise ParseError(f"bad dotted end '{args[2]}'", lineno, _column(raw, args[2]))
            edges.append(Edge(eid, MatchData(Sign(args[1]), args[2]), twisted=len(args) == 4))

        elif keyword == "loop":
            if len(args) != 1:
                raise ParseError("loop takes exactly one id", lineno, 1)
            loops.append(_check_id(args[0], raw, lineno))

        elif keyword == "flag":
            if args != ["zgraphene"]:
                raise ParseError(f"unknown flag '{' '.join(args)}'", lineno, 1)
            z_flag = True

        else:
            raise ParseError(f"unknown keyword '{keyword}'", lineno, _column(raw, keyword))

    g = MatchedGraph.build(vertices, edges, loops, z_flag)
    validate_matched_graph(g).raise_if_invalid()
    return g


def serialize_matched_graph(g: MatchedGraph) -> str:
    lines = []
    for v in g.vertices:
        lines.append(f"vertex {v.id} {v.decoration.value} " + " ".join(str(e) for e in v.rotation))
    for e in g.edges:
        twist = f" {TWIST_MARK}" if e.twisted else ""
        if e.matched:
            lines.append(f"medge {e.id} {e.match.sign.value} {e.match.dot}{twist}")
        else:
            lines.append(f"edge {e.id}{twist}")
    lines.extend(f"loop {lid}" for lid in g.free_loops)
    if g.z_flag:
        lines.append("flag zgraphene")
    return "\n".join(lines) + "\n"


def parse_gauss_code(text: str) -> GaussCode:
    """Parse one 'component:' line per component; an empty line body is an unknot."""
    components: List[Tuple[Pass, ...]] = []
    signs: Dict[int, Sign] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep or head.strip() != "component":
            raise ParseError("expected 'component:'", lineno, 1)
        passes = []
        for token in body.split():
            m = PASS_TOKEN.match(token)
            if not m:
                raise ParseError(f"unknown token '{token}'", lineno, _column(raw, token))
            crossing, sign = int(m.group(2)), Sign(m.group(3))
            if signs.setdefault(crossing, sign) is not sign:
                raise ParseError(f"crossing {crossing} carries both signs", lineno,
                                 _column(raw, token))
            passes.append(Pass(crossing, Strand(m.group(1))))
        components.append(tuple(passes))

    d = GaussCode.build(components, signs)
    validate_gauss_code(d).raise_if_invalid()
    return d


def serialize_gauss_code(d: GaussCode) -> str:
    lines = []
    for comp in d.components:
        body = " ".join(p.token(d.sign(p.crossing)) for p in comp)
        lines.append(f"component: {body}".rstrip())
    return "\n".join(lines) + "\n"


def gauss_code_inline(d: GaussCode) -> str:
    """Single-line form used in logs and traces: components joined by ' / '."""
    return " / ".join(" ".join(p.token(d.sign(p.crossing)) for p in comp) or "()"
                      for comp in d.components)
