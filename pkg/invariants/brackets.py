"""
Bracket State Sums
Kauffman bracket, Jones polynomial, 2-factor bracket, Penrose number and the
binary bracket, all as exact sums over the 2^n smoothing states.

This module demonstrates understanding of:
- Sharing one state model between crossings and matched edges
- Writhe normalization of unoriented brackets
- Counting proper circle labelings inside a state sum
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.models import GaussCode, MatchedGraph, Sign
from core.polynomial import LaurentPoly
from core.states import StateModel, default_state_limit, gauss_state_model, graph_state_model
from core.surfaces import genus, normalize_solid

LOOP_Q = LaurentPoly.from_dict({-1: 1, 1: 1})
MINUS_Q = LaurentPoly.monomial(1, -1)


@dataclass(frozen=True)
class StateSum:
    """Histogram of states keyed by (number of 1-smoothings, number of circles)."""

    n_sites: int
    histogram: Dict[Tuple[int, int], int]

    def total(self) -> int:
        return sum(self.histogram.values())


def state_sum(model: StateModel, limit: Optional[int] = None, what: str = "state sum") -> StateSum:
    model.check_size(limit if limit is not None else default_state_limit(), what)
    histogram: Counter = Counter()
    for s in range(model.n_states):
        histogram[(model.ones(s), model.resolve(s).n_circles)] += 1
    logger.debug(f"{what}: {model.n_states} states over {model.n_sites} sites")
    return StateSum(model.n_sites, dict(histogram))


def _bracket_from(sums: StateSum) -> LaurentPoly:
    return LaurentPoly.sum_of(count * MINUS_Q ** ones * LOOP_Q ** circles
                              for (ones, circles), count in sums.histogram.items())


def crossing_counts(d: GaussCode) -> Tuple[int, int]:
    n_plus = sum(1 for c in d.crossings if c.sign is Sign.POSITIVE)
    return n_plus, d.n_crossings - n_plus


def writhe(d: GaussCode) -> int:
    n_plus, n_minus = crossing_counts(d)
    return n_plus - n_minus


def kauffman_bracket(d: GaussCode, limit: Optional[int] = None) -> LaurentPoly:
    """Sum of (-q)^#B (q^-1 + q)^#circles over all states."""
    return _bracket_from(state_sum(gauss_state_model(d), limit, "Kauffman bracket"))


def jones(d: GaussCode, limit: Optional[int] = None) -> LaurentPoly:
    """(-1)^n- q^(n+ - 2n-) times the bracket; the unknot gives q^-1 + q."""
    n_plus, n_minus = crossing_counts(d)
    return ((-1) ** n_minus) * kauffman_bracket(d, limit).shift(n_plus - 2 * n_minus)


def two_factor_bracket(g: MatchedGraph, limit: Optional[int] = None) -> LaurentPoly:
    model = graph_state_model(normalize_solid(g), signed=True)
    return _bracket_from(state_sum(model, limit, "2-factor bracket"))


def penrose_number(g: MatchedGraph, limit: Optional[int] = None) -> int:
    """Signed count with loop value 3; equals the Tait count only in genus 0."""
    h = normalize_solid(g)
    if h.z_flag:
        logger.warning("⚠️ Penrose number on a Z-representative")
    if genus(h) != 0:
        logger.warning("⚠️ Penrose number on a nonzero-genus diagram is not a Tait count")
    sums = state_sum(graph_state_model(h), limit, "Penrose number")
    return sum(count * (-1) ** ones * 3 ** circles for (ones, circles), count in sums.histogram.items())


def count_labelings(n_nodes: int, constraints: Sequence[Tuple[int, int]], colors: int) -> int:
    """Number of maps nodes -> colors with every constrained pair labelled differently."""
    if any(a == b for a, b in constraints):
        return 0
    neighbours: List[List[int]] = [[] for _ in range(n_nodes)]
    for a, b in constraints:
        neighbours[a].append(b)
        neighbours[b].append(a)
    labels = [-1] * n_nodes

    def place(k: int) -> int:
        if k == n_nodes:
            return 1
        total = 0
        for colour in range(colors):
            if all(labels[n] != colour for n in neighbours[k] if n < k):
                labels[k] = colour
                total += place(k + 1)
        labels[k] = -1
        return total

    return place(0)


def labeled_state_sum(model: StateModel, colors: int, limit: Optional[int] = None,
                      what: str = "labeled state sum") -> Dict[int, int]:
    """Map #1-smoothings -> total number of proper circle labelings over those states."""
    model.check_size(limit if limit is not None else default_state_limit(), what)
    out: Counter = Counter()
    for s in range(model.n_states):
        r = model.resolve(s)
        count = count_labelings(r.n_circles, r.strands, colors)
        if count:
            out[model.ones(s)] += count
    return dict(out)


def binary_bracket(d: GaussCode, limit: Optional[int] = None) -> LaurentPoly:
    """Sum of A^(#A - #B) times the number of proper 2-labelings of each state."""
    model = gauss_state_model(d)
    counts = labeled_state_sum(model, 2, limit, "binary bracket")
    n = model.n_sites
    return LaurentPoly.from_dict({n - 2 * ones: c for ones, c in counts.items()}, var="A")


def normalized_binary(d: GaussCode, limit: Optional[int] = None) -> LaurentPoly:
    return binary_bracket(d, limit).shift(-writhe(d))
