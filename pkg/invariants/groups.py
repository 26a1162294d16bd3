"""
Link Group Presentations
Wirtinger-style presentation of a virtual link group read off a Gauss code,
its abelianization rank, and Fox p-coloring counts.

This module demonstrates understanding of:
- Cutting components into arcs at under passes
- Conjugation relators whose form depends on the crossing sign
- Nullity of a modular linear system as a coloring count
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
import sympy
from loguru import logger

from core.errors import UsageError
from core.models import GaussCode, Segment, Sign, Strand
from utils.config import get_settings

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]


@dataclass(frozen=True)
class GroupPresentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]

    @staticmethod
    def word_text(word: Word) -> str:
        return "*".join(g if e == 1 else f"{g}^{e}" for g, e in word)

    def text(self) -> str:
        rels = "; ".join(self.word_text(w) for w in self.relators)
        return f"gens: {','.join(self.generators)}; rels: {rels}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class _Crossing:
    over: int
    under_in: int
    under_out: int
    sign: Sign


def _arc_index(d: GaussCode) -> Tuple[Dict[Segment, int], int]:
    """Arc number of every segment; a new arc starts after each under pass."""
    arc_of: Dict[Segment, int] = {}
    count = 0
    for i, comp in enumerate(d.components):
        unders = [j for j, p in enumerate(comp) if p.strand is Strand.UNDER]
        if not unders:
            for seg in ((i, j) for j in range(max(len(comp), 1))):
                arc_of[seg] = count
            count += 1
            continue
        n = len(comp)
        first = count
        for k, start in enumerate(unders):
            stop = unders[(k + 1) % len(unders)]
            j = start
            while True:
                arc_of[(i, j)] = first + k
                j = (j + 1) % n
                if j == stop:
                    break
        count += len(unders)
    return arc_of, count


def _crossing_arcs(d: GaussCode) -> Tuple[List[_Crossing], int]:
    arc_of, n_arcs = _arc_index(d)
    out = []
    for cid in d.crossing_ids:
        ends = d.ends(cid)
        out.append(_Crossing(arc_of[ends["over_in"]], arc_of[ends["under_in"]],
                             arc_of[ends["under_out"]], d.sign(cid)))
    return out, n_arcs


def wirtinger_presentation(d: GaussCode) -> GroupPresentation:
    crossings, n_arcs = _crossing_arcs(d)
    gens = tuple(f"x{k + 1}" for k in range(n_arcs))
    relators = []
    for c in crossings:
        o, a, b = gens[c.over], gens[c.under_in], gens[c.under_out]
        if c.sign is Sign.POSITIVE:
            relators.append(((o, 1), (a, 1), (o, -1), (b, -1)))
        else:
            relators.append(((o, -1), (a, 1), (o, 1), (b, -1)))
    logger.debug(f"Wirtinger: {len(gens)} generators, {len(relators)} relators")
    return GroupPresentation(gens, tuple(relators))


def abelianization_rank(presentation: GroupPresentation) -> int:
    """Free rank of the abelianized group: generators minus the rank of the relation matrix."""
    column = {g: k for k, g in enumerate(presentation.generators)}
    if not presentation.relators:
        return len(presentation.generators)
    rows = []
    for word in presentation.relators:
        row = [0] * len(column)
        for g, e in word:
            row[column[g]] += e
        rows.append(row)
    return len(column) - sympy.Matrix(rows).rank()


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over the field with p elements by row reduction."""
    m = np.array(matrix, dtype=np.int64) % p
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, col]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        m[rank] = (m[rank] * pow(int(m[rank, col]), -1, p)) % p
        others = np.nonzero(m[:, col])[0]
        for r in others:
            if r != rank:
                m[r] = (m[r] - m[r, col] * m[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def fox_colorings(d: GaussCode, p: int) -> int:
    """Arc labelings in Z/p with 2*over = under_in + under_out at every crossing."""
    max_prime = get_settings().max_prime
    if p % 2 == 0 or not _is_prime(p):
        raise UsageError(f"Fox colorings need an odd prime, got {p}")
    if p > max_prime:
        raise UsageError(f"prime {p} exceeds the configured maximum {max_prime}")

    crossings, n_arcs = _crossing_arcs(d)
    matrix = np.zeros((len(crossings), n_arcs), dtype=np.int64)
    for r, c in enumerate(crossings):
        matrix[r, c.over] += 2
        matrix[r, c.under_in] -= 1
        matrix[r, c.under_out] -= 1
    rank = rank_mod_p(matrix, p) if len(crossings) else 0
    return p ** (n_arcs - rank)
