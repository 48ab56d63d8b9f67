"""Budget accounting for exhaustive enumerations.

Every potentially exponential loop in the package charges a Budget. The
default limit comes from the PQPIERCE_BUDGET environment variable when
set; an explicit limit always wins over the environment.
"""

from __future__ import annotations

import os

from .errors import BudgetExceeded

DEFAULT_SUBSET_BUDGET = 2_000_000
DEFAULT_NODE_BUDGET = 1_000_000
ENV_VAR = "PQPIERCE_BUDGET"


def default_limit(fallback: int = DEFAULT_SUBSET_BUDGET) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return fallback
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


class Budget:
    """Mutable spend counter with a hard limit."""

    def __init__(self, limit: int | None = None, what: str = "enumeration"):
        self.limit = default_limit() if limit is None else limit
        self.what = what
        self.spent = 0

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExceeded(self.spent, self.limit, self.what)

    def would_exceed(self, amount: int) -> bool:
        return self.spent + amount > self.limit

    def __repr__(self) -> str:
        return f"Budget({self.spent}/{self.limit}, {self.what!r})"
