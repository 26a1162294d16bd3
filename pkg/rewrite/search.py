"""
Bounded Equivalence Search
Bidirectional breadth-first search over Reidemeister neighbours, with
replayable traces and seeded random walks.

This module demonstrates understanding of:
- Layered bidirectional BFS with canonical-form deduplication
- Budgets reported as outcomes rather than errors
- Rebuilding a forward trace from canonical waypoints
"""

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.errors import ConstructionError, ReplayError
from core.models import GaussCode
from rewrite.reidemeister import (R_MOVES, MoveName, MoveStep, apply_move, canonical_code,
                                  iter_moves, reidemeister_neighbors)
from utils.config import get_settings


@dataclass(frozen=True)
class MoveTrace:
    steps: Tuple[MoveStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def moves(self) -> List[MoveName]:
        return [s.move for s in self.steps]

    def to_text(self) -> str:
        return "".join(f"{s}\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> "MoveTrace":
        steps = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                steps.append(MoveStep.parse(line))
            except ValueError:
                raise ReplayError(f"unreadable move '{line}'", lineno)
        return cls(tuple(steps))


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int = field(default_factory=lambda: get_settings().search_depth)
    max_nodes: int = field(default_factory=lambda: get_settings().search_nodes)
    max_crossings: Optional[int] = None


@dataclass(frozen=True)
class SearchOutcome:
    found: bool
    trace: Optional[MoveTrace] = None
    reason: str = ""
    nodes: int = 0
    max_crossings: int = 0

    def summary(self) -> str:
        if self.found:
            return f"found in {len(self.trace)} moves ({self.nodes} nodes)"
        return f"not found within budget: {self.reason} ({self.nodes} nodes)"


def replay_trace(start: GaussCode, trace: MoveTrace) -> GaussCode:
    current = start
    for k, step in enumerate(trace.steps, start=1):
        if step.move not in R_MOVES and step.move is not MoveName.Z:
            raise ReplayError(f"{step.move.value} is not a Gauss-code move", k)
        nxt = apply_move(current, step)
        if nxt is None:
            raise ReplayError(f"'{step}' does not apply", k)
        current = nxt
    return current


def random_walk(d: GaussCode, steps: int, rng: random.Random,
                max_crossings: Optional[int] = None) -> Tuple[GaussCode, MoveTrace]:
    """Seeded sequence of R-moves; insertions beyond max_crossings are skipped."""
    current, trace = d, []
    for _ in range(steps):
        options = [(c, s) for c, s in iter_moves(current)
                   if max_crossings is None or c.n_crossings <= max_crossings]
        if not options:
            break
        current, step = options[rng.randrange(len(options))]
        trace.append(step)
    return current, MoveTrace(tuple(trace))


def _path(parents: Dict[str, Optional[str]], node: str) -> List[str]:
    out = []
    while node is not None:
        out.append(node)
        node = parents[node]
    return out


def _rebuild_trace(start: GaussCode, waypoints: Sequence[str]) -> MoveTrace:
    current, steps = start, []
    for target in waypoints[1:]:
        for code, step in iter_moves(current):
            if canonical_code(code) == target:
                current = code
                steps.append(step)
                break
        else:
            raise ConstructionError(f"no move reaches waypoint {target}")
    return MoveTrace(tuple(steps))


def equivalent_within(d1: GaussCode, d2: GaussCode,
                      budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """
    Search for a Reidemeister sequence from d1 to d2.

    Only reports "found" with a replayable trace, or "not found" with the
    budget that ran out; inequivalence is never claimed.
    """
    budget = budget or SearchBudget()
    cap = budget.max_crossings
    if cap is None:
        cap = max(d1.n_crossings, d2.n_crossings)

    k1, k2 = canonical_code(d1), canonical_code(d2)
    if k1 == k2:
        return SearchOutcome(True, MoveTrace(), nodes=1, max_crossings=cap)

    sides = []
    for start, key in ((d1, k1), (d2, k2)):
        sides.append({"parents": {key: None}, "codes": {key: start}, "frontier": [key], "depth": 0})
    nodes = 2

    while sides[0]["depth"] + sides[1]["depth"] < budget.max_depth:
        idx = 0 if len(sides[0]["frontier"]) <= len(sides[1]["frontier"]) else 1
        side, other = sides[idx], sides[1 - idx]
        if not side["frontier"]:
            return SearchOutcome(False, reason="move graph exhausted", nodes=nodes,
                                 max_crossings=cap)

        next_frontier, meetings = [], []
        for key in side["frontier"]:
            for code, _ in reidemeister_neighbors(side["codes"][key], max_crossings=cap):
                nkey = canonical_code(code)
                if nkey in side["parents"]:
                    continue
                side["parents"][nkey] = key
                side["codes"][nkey] = code
                next_frontier.append(nkey)
                nodes += 1
                if nkey in other["parents"]:
                    meetings.append(nkey)
                if nodes > budget.max_nodes:
                    logger.info(f"🔍 search stopped at {nodes} nodes")
                    return SearchOutcome(False, reason="node budget exhausted", nodes=nodes,
                                         max_crossings=cap)
        side["frontier"] = next_frontier
        side["depth"] += 1
        logger.debug(f"search layer: side={idx} depth={side['depth']} frontier={len(next_frontier)}")

        if meetings:
            meet = min(meetings, key=lambda k: (len(_path(other["parents"], k)), k))
            fwd, bwd = sides[0], sides[1]
            waypoints = list(reversed(_path(fwd["parents"], meet))) + _path(bwd["parents"], meet)[1:]
            trace = _rebuild_trace(d1, waypoints)
            logger.info(f"🔍 equivalence found: {len(trace)} moves, {nodes} nodes")
            return SearchOutcome(True, trace, nodes=nodes, max_crossings=cap)

    return SearchOutcome(False, reason=f"depth budget {budget.max_depth} exhausted", nodes=nodes,
                         max_crossings=cap)
