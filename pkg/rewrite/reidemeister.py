"""
Reidemeister Moves on Gauss Codes
Generation of all single R1/R2/R3 applications, the opt-in Z move, and the
canonical text form used to deduplicate codes.

This module demonstrates understanding of:
- Local move patterns expressed as adjacency conditions on pass sequences
- Replayable move sites encoded as plain strings
- Exhaustive canonicalization over relabelings, rotations and reorderings

Virtual moves and the detour move are identities on Gauss codes and have no
counterpart here.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.models import GaussCode, Pass, Segment, Sign, Strand


class MoveName(str, Enum):
    R1_PLUS = "R1+"
    R1_MINUS = "R1-"
    R2_PLUS = "R2+"
    R2_MINUS = "R2-"
    R3 = "R3"
    Z = "Z"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    M5 = "M5"
    FLIP = "FLIP"


@dataclass(frozen=True)
class MoveStep:
    move: MoveName
    site: str

    def __str__(self) -> str:
        return f"{self.move.value} @ {self.site}"

    @classmethod
    def parse(cls, line: str) -> "MoveStep":
        name, _, site = line.partition("@")
        return cls(MoveName(name.strip()), site.strip())


R_MOVES = (MoveName.R1_PLUS, MoveName.R1_MINUS, MoveName.R2_PLUS, MoveName.R2_MINUS, MoveName.R3)


def _rebuild(d: GaussCode, components: Sequence[Sequence[Pass]], signs: Dict[int, Sign]) -> GaussCode:
    used = {p.crossing for comp in components for p in comp}
    return GaussCode.build(components, {c: s for c, s in signs.items() if c in used})


def _remove(d: GaussCode, crossings: Sequence[int]) -> GaussCode:
    drop = set(crossings)
    comps = [[p for p in comp if p.crossing not in drop] for comp in d.components]
    return _rebuild(d, comps, dict(d.sign_map))


def _insert(d: GaussCode, inserts: Dict[Segment, List[Pass]], signs: Dict[int, Sign]) -> GaussCode:
    """Insert pass lists into segments; segment (i, j) opens after pass j."""
    comps = []
    for i, comp in enumerate(d.components):
        if not comp:
            comps.append(list(inserts.get((i, 0), [])))
            continue
        out = []
        for j, p in enumerate(comp):
            out.append(p)
            out.extend(inserts.get((i, j), []))
        comps.append(out)
    merged = dict(d.sign_map)
    merged.update(signs)
    return _rebuild(d, comps, merged)


def _follows(d: GaussCode, first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    """True when `second` is the pass right after `first` on the same component."""
    i, j = first
    k, m = second
    n = len(d.components[i])
    return i == k and n > 1 and (j + 1) % n == m


def _adjacency_senses(d: GaussCode, p: Tuple[int, int], q: Tuple[int, int]) -> List[int]:
    """+1 if q follows p, -1 if p follows q (both on a two-pass component)."""
    senses = []
    if _follows(d, p, q):
        senses.append(1)
    if _follows(d, q, p):
        senses.append(-1)
    return senses


def _r1_minus(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    for c in d.crossing_ids:
        o = d.positions[(c, Strand.OVER)]
        u = d.positions[(c, Strand.UNDER)]
        if _adjacency_senses(d, o, u):
            yield _remove(d, [c]), MoveStep(MoveName.R1_MINUS, f"c{c}")


def _r1_plus(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    c = d.next_crossing_id()
    for seg in d.segments():
        for order, sign in product(("OU", "UO"), (Sign.POSITIVE, Sign.NEGATIVE)):
            passes = [Pass(c, Strand(ch)) for ch in order]
            site = f"seg{seg[0]}.{seg[1]} {order}{sign.value}"
            yield _insert(d, {seg: passes}, {c: sign}), MoveStep(MoveName.R1_PLUS, site)


def _r2_minus(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    ids = d.crossing_ids
    for x, a in enumerate(ids):
        for b in ids[x + 1:]:
            if d.sign(a) is d.sign(b):
                continue
            oa, ob = d.positions[(a, Strand.OVER)], d.positions[(b, Strand.OVER)]
            ua, ub = d.positions[(a, Strand.UNDER)], d.positions[(b, Strand.UNDER)]
            if _adjacency_senses(d, oa, ob) and _adjacency_senses(d, ua, ub):
                yield _remove(d, [a, b]), MoveStep(MoveName.R2_MINUS, f"c{a},{b}")


def _r2_plus(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    a = d.next_crossing_id()
    b = a + 1
    segments = d.segments()
    for s_over, s_under in product(segments, segments):
        for under_order, sign in product(("ab", "ba"), (Sign.POSITIVE, Sign.NEGATIVE)):
            overs = [Pass(a, Strand.OVER), Pass(b, Strand.OVER)]
            unders = [Pass(a, Strand.UNDER), Pass(b, Strand.UNDER)]
            if under_order == "ba":
                unders.reverse()
            signs = {a: sign, b: sign.flipped()}
            base = f"over{s_over[0]}.{s_over[1]} under{s_under[0]}.{s_under[1]} {under_order}{sign.value}"
            if s_over != s_under:
                yield (_insert(d, {s_over: overs, s_under: unders}, signs),
                       MoveStep(MoveName.R2_PLUS, base))
                continue
            # Both strands inside one segment: the over pair can come first or second
            for first in ("over", "under"):
                passes = overs + unders if first == "over" else unders + overs
                yield (_insert(d, {s_over: passes}, signs),
                       MoveStep(MoveName.R2_PLUS, f"{base} {first}-first"))


def _r3(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    """
    Crossing a is top/middle, b top/bottom, c middle/bottom. The three strand
    segments must each carry two adjacent passes, and the crossing signs must
    agree with the relative directions of the segments.
    """
    ids = d.crossing_ids
    pos = d.positions
    for a, b, c in permutations(ids, 3):
        top = (pos[(a, Strand.OVER)], pos[(b, Strand.OVER)])
        mid = (pos[(a, Strand.UNDER)], pos[(c, Strand.OVER)])
        bot = (pos[(b, Strand.UNDER)], pos[(c, Strand.UNDER)])
        senses = [_adjacency_senses(d, *pair) for pair in (top, mid, bot)]
        if not all(senses):
            continue
        ea, eb, ec = (d.sign(x).unit for x in (a, b, c))
        valid = any(ea * st * sm == eb * st * sb == ec * sm * sb
                    for st, sm, sb in product(*senses))
        if not valid:
            continue
        comps = [list(comp) for comp in d.components]
        for first, second in (top, mid, bot):
            (i, j), (k, m) = first, second
            comps[i][j], comps[k][m] = comps[k][m], comps[i][j]
        yield _rebuild(d, comps, dict(d.sign_map)), MoveStep(MoveName.R3, f"c{a},{b},{c}")


def z_moves(d: GaussCode) -> Iterator[Tuple[GaussCode, MoveStep]]:
    """Exchange over and under at one crossing, keeping its sign."""
    for c in d.crossing_ids:
        comps = [[Pass(p.crossing, p.strand.other()) if p.crossing == c else p for p in comp]
                 for comp in d.components]
        yield _rebuild(d, comps, dict(d.sign_map)), MoveStep(MoveName.Z, f"c{c}")


def iter_moves(d: GaussCode, include_z: bool = False) -> Iterator[Tuple[GaussCode, MoveStep]]:
    yield from _r1_minus(d)
    yield from _r2_minus(d)
    yield from _r3(d)
    yield from _r1_plus(d)
    yield from _r2_plus(d)
    if include_z:
        yield from z_moves(d)


def reidemeister_neighbors(d: GaussCode, include_z: bool = False,
                           max_crossings: Optional[int] = None) -> List[Tuple[GaussCode, MoveStep]]:
    """All single-move results, one representative per canonical form."""
    seen = set()
    out = []
    for code, step in iter_moves(d, include_z):
        if max_crossings is not None and code.n_crossings > max_crossings:
            continue
        key = canonical_code(code)
        if key in seen:
            continue
        seen.add(key)
        out.append((code, step))
    return out


def apply_move(d: GaussCode, step: MoveStep) -> Optional[GaussCode]:
    for code, candidate in iter_moves(d, include_z=step.move is MoveName.Z):
        if candidate == step:
            return code
    return None


def _relabelled(components: Sequence[Sequence[Pass]], signs: Dict[int, Sign]) -> Tuple:
    labels: Dict[int, int] = {}
    out = []
    for comp in components:
        row = []
        for p in comp:
            label = labels.setdefault(p.crossing, len(labels) + 1)
            row.append((label, p.strand.value, signs[p.crossing].value))
        out.append(tuple(row))
    return tuple(out)


def canonical_code(d: GaussCode) -> str:
    """Minimal form over crossing relabelings, component rotations and reorderings."""
    signs = d.sign_map
    best = None
    for order in permutations(d.components):
        rotations = [[comp[r:] + comp[:r] for r in range(len(comp))] or [comp] for comp in order]
        for choice in product(*rotations):
            key = _relabelled(choice, signs)
            if best is None or key < best:
                best = key
    if best is None:
        return ""
    return " / ".join(" ".join(f"{s}{label}{sign}" for label, s, sign in comp) or "()"
                      for comp in best)
