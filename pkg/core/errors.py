"""
Error hierarchy shared by every toolkit module.
"""

from typing import Optional


class GrkError(Exception):
    """Base class for domain errors raised by the toolkit."""


class ParseError(GrkError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")


class InvariantError(GrkError):
    """A constructed value violates its type invariants."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class NonOrientableError(GrkError):
    pass


class SizeLimitError(GrkError):
    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class PatternMismatchError(GrkError):
    pass


class BifurcationError(GrkError):
    """A resolution cube edge keeps the number of circles unchanged."""


class GenusError(GrkError):
    pass


class ConstructionError(GrkError):
    pass


class OrientationError(GrkError):
    pass


class ReplayError(GrkError):
    def __init__(self, message: str, step: Optional[int] = None):
        self.step = step
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(f"{prefix}{message}")


class UsageError(GrkError):
    pass


class SearchBudgetExceeded(GrkError):
    """A bounded search ran out of budget; says nothing about inequivalence."""

    def __init__(self, outcome):
        self.outcome = outcome
        super().__init__(outcome.summary())
