"""Exception types shared across the package."""


class PQPierceError(Exception):
    """Base class for all package errors."""


class GeomError(PQPierceError, ValueError):
    """Malformed geometric input: dimension mismatch, bad variant mix, inverted bounds."""


class EmptyBodyError(PQPierceError, ValueError):
    """A hypergraph edge (a body) contains no candidate point; carries the body index."""

    def __init__(self, body_index: int):
        self.body_index = body_index
        super().__init__(f"body {body_index} contains no candidate point")


class BudgetExceeded(PQPierceError, RuntimeError):
    """An enumeration or search exceeded its configured budget.

    Carries how much was spent and the limit, so callers can report
    "unverifiable at this scale" instead of silently passing.
    """

    def __init__(self, spent: int, limit: int, what: str = "enumeration"):
        self.spent = spent
        self.limit = limit
        self.what = what
        super().__init__(f"{what} budget exhausted: {spent} > {limit}")


class HypothesisViolation(PQPierceError):
    """A pipeline precondition failed; carries the violating witness when one exists."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class GenerationError(PQPierceError, RuntimeError):
    """An instance generator could not produce a verified instance."""
