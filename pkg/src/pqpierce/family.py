"""Families of convex bodies and their combinatorial intersection structure.

Covers property verification ("among any p members some q share a
point"), the exact-regime classifier for parameter triples, the
empirical fractional-Helly census, and the small-instance subfamily
piercing hypothesis check. All subset enumeration is lexicographic and
budget-capped; witnesses are always the lexicographically first
violation, so results are reproducible run to run.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .budget import Budget
from .errors import BudgetExceeded, GeomError
from .geom import ConvexBody, intersect_all


@dataclass(frozen=True)
class Family:
    """Ordered finite family of convex bodies with optional multiplicities."""

    bodies: tuple[ConvexBody, ...]
    multiplicities: tuple[int, ...] = ()
    dim: int = field(default=0)

    def __post_init__(self):
        if not self.bodies:
            raise GeomError("family must contain at least one body")
        object.__setattr__(self, "bodies", tuple(self.bodies))
        dims = {b.dim for b in self.bodies}
        if len(dims) != 1:
            raise GeomError(f"bodies of mixed dimension: {sorted(dims)}")
        d = dims.pop()
        if self.dim and self.dim != d:
            raise GeomError(f"declared dim {self.dim} but bodies have dim {d}")
        object.__setattr__(self, "dim", d)
        if not self.multiplicities:
            object.__setattr__(self, "multiplicities", (1,) * len(self.bodies))
        else:
            object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        if len(self.multiplicities) != len(self.bodies):
            raise GeomError("multiplicities length must match bodies length")
        if any(m < 1 for m in self.multiplicities):
            raise GeomError("multiplicities must be positive integers")

    @property
    def n(self) -> int:
        return len(self.bodies)

    @property
    def total_weight(self) -> int:
        return sum(self.multiplicities)


@dataclass(frozen=True)
class PQReport:
    p: int
    q: int
    holds: bool
    witness: tuple[int, ...] | None = None


class Regime(enum.Enum):
    HD_TIGHT = "hd_tight"
    OPEN = "open"


@dataclass(frozen=True)
class FractionalHellyCensus:
    n: int
    d: int
    alpha: Fraction
    delta: Fraction


def verify_pq(f: Family, p: int, q: int, budget: Budget | None = None) -> PQReport:
    """Exhaustively decide whether among any p bodies some q share a point.

    Returns the lexicographically first violating p-subset as witness.
    Multiplicities are ignored: the property concerns distinct members.
    Vacuously true when p exceeds the family size.
    """
    if not (p >= q >= 1):
        raise ValueError(f"need p >= q >= 1, got p={p}, q={q}")
    if p > f.n:
        return PQReport(p=p, q=q, holds=True)
    budget = budget or Budget(what="pq subsets")
    good_q: set[tuple[int, ...]] = set()
    bad_q: set[tuple[int, ...]] = set()
    for psub in combinations(range(f.n), p):
        budget.spend()
        found = False
        for qsub in combinations(psub, q):
            if qsub in good_q:
                found = True
                break
            if qsub in bad_q:
                continue
            budget.spend()
            if intersect_all([f.bodies[i] for i in qsub]) is not None:
                good_q.add(qsub)
                found = True
                break
            bad_q.add(qsub)
        if not found:
            return PQReport(p=p, q=q, holds=False, witness=psub)
    return PQReport(p=p, q=q, holds=True)


def hd_regime(p: int, q: int, d: int) -> Regime:
    """Classify a parameter triple: exact p-q+1 piercing bound, or open territory.

    The tight regime is exactly p(d-1) < (q-1)d.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not (p >= q >= d + 1):
        raise ValueError(f"need p >= q >= d+1, got p={p}, q={q}, d={d}")
    return Regime.HD_TIGHT if p * (d - 1) < (q - 1) * d else Regime.OPEN


def _expanded_indices(f: Family) -> list[int]:
    out: list[int] = []
    for i, m in enumerate(f.multiplicities):
        out.extend([i] * m)
    return out


def fractional_helly_census(f: Family, budget: Budget | None = None) -> FractionalHellyCensus:
    """Fraction of intersecting (d+1)-tuples, and the deepest point's reach.

    Bodies with multiplicity a count as a distinct copies, so n here is
    the total weight. delta * n equals the deepest candidate point's
    weighted depth exactly.
    """
    from . import piercing

    d = f.dim
    expanded = _expanded_indices(f)
    m = len(expanded)
    if m < d + 1:
        raise ValueError(f"census needs at least d+1 = {d + 1} members, got {m}")
    budget = budget or Budget(what="census tuples")
    total = math.comb(m, d + 1)
    budget.spend(total)
    cache: dict[tuple[int, ...], bool] = {}
    hits = 0
    for tup in combinations(range(m), d + 1):
        key = tuple(sorted(set(expanded[i] for i in tup)))
        if key not in cache:
            cache[key] = intersect_all([f.bodies[i] for i in key]) is not None
        if cache[key]:
            hits += 1
    alpha = Fraction(hits, total)
    _, depth = piercing.deepest_point(f)
    delta = Fraction(depth, m)
    return FractionalHellyCensus(n=m, d=d, alpha=alpha, delta=delta)


def check_theorem_1_2_hypothesis(
    f: Family, x: int, budget: Budget | None = None
) -> bool:
    """True iff every x-subset of the family can be pierced by fewer than ceil(x/d) points.

    Intended for small instances; the subset loop and each inner exact
    solve are budget-guarded.
    """
    from . import piercing

    if x > f.n:
        raise ValueError(f"subfamily size x={x} exceeds family size n={f.n}")
    if x < 1:
        raise ValueError("need x >= 1")
    budget = budget or Budget(what="t12 subsets")
    threshold = -(-x // f.dim)  # ceil(x/d)
    if threshold <= 1:
        return False  # every nonempty family needs at least one point
    for sub in combinations(range(f.n), x):
        budget.spend()
        subfam = Family(bodies=tuple(f.bodies[i] for i in sub))
        cert = piercing.exact_piercing(subfam)
        if not cert.optimal:
            raise BudgetExceeded(budget.spent, budget.limit, "t12 inner piercing solve")
        if len(cert.points) >= threshold:
            return False
    return True
