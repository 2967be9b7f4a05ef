from __future__ import annotations


class InvalidArgument(ValueError):
    """Raised when an input lies outside an operation's domain."""


class NoSpanningPath(ValueError):
    """Raised when a spanning-path family is requested for K_{a,b} with b > a + 1."""


class BudgetExhausted(RuntimeError):
    """Raised when an exact search runs out of its node or time budget.

    The search never returns a truncated answer in place of an exact one.
    """

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class GraphParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
