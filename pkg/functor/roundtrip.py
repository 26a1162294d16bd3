"""
Round-trip contracts between graphenes and virtual links.
"""

from typing import Optional, Union

from loguru import logger

from core.errors import SearchBudgetExceeded
from core.models import GaussCode, MatchedGraph
from functor.kmap import k_inverse, k_map
from rewrite.graphene import graphs_equivalent_within
from rewrite.reidemeister import canonical_code
from rewrite.search import SearchBudget, SearchOutcome


def code_round_trip(d: GaussCode) -> bool:
    """K(K inverse(d)) equals d up to relabeling, rotation and component order."""
    return canonical_code(k_map(k_inverse(d))) == canonical_code(d)


def graph_round_trip(g: MatchedGraph, budget: Optional[SearchBudget] = None) -> SearchOutcome:
    """Search for graphene moves taking g to K inverse(K(g)); the trace replays from g."""
    back = k_inverse(k_map(g))
    return graphs_equivalent_within(g, back, budget or SearchBudget(max_depth=6))


def round_trip_check(x: Union[MatchedGraph, GaussCode], budget: Optional[SearchBudget] = None) -> bool:
    if isinstance(x, GaussCode):
        ok = code_round_trip(x)
        logger.debug(f"code round trip: {ok}")
        return ok
    outcome = graph_round_trip(x, budget)
    if not outcome.found:
        raise SearchBudgetExceeded(outcome)
    logger.debug(f"graph round trip: {outcome.summary()}")
    return True
