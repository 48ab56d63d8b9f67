"""Exact rational linear programming.

Primal simplex over fractions.Fraction in the fixed standard form

    maximize c.x   subject to   A x <= b,  x >= 0

with Bland's anti-cycling rule throughout (entering: lowest-index
improving column; leaving: lowest basic variable index among ratio
ties), so identical inputs produce bit-identical outcomes.

Every outcome carries an exactly checkable certificate:

  * Feasible(x)          -- x >= 0 and A x <= b
  * Infeasible(y)        -- y >= 0, y A >= 0, y.b < 0 (Farkas vector)
  * Optimal(x, y, value) -- primal and dual feasible with zero gap
  * Unbounded(x, ray)    -- feasible x plus an improving recession ray

Infeasibility detection uses a single auxiliary variable (column of -1
added to every row, objective max -x0); when the auxiliary optimum is
negative, the Farkas vector is read off the slack reduced costs of the
final tableau. Matrices are dense; instance sizes here are at most a
few hundred variables, so there is no factorization reuse.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geom import rat

ZERO = Fraction(0)
ONE = Fraction(1)


class Sense(enum.Enum):
    FEASIBILITY = "feasibility"
    MAXIMIZE = "maximize"


class Status(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """A x <= b with x >= 0; objective present only in Maximize sense."""

    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    objective: tuple[Fraction, ...] | None = None
    sense: Sense = Sense.FEASIBILITY

    def __post_init__(self):
        rows = tuple(tuple(rat(v) for v in row) for row in self.A)
        object.__setattr__(self, "A", rows)
        object.__setattr__(self, "b", tuple(rat(v) for v in self.b))
        if len(rows) != len(self.b):
            raise ValueError(f"{len(rows)} rows vs {len(self.b)} right-hand sides")
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError("ragged constraint matrix")
        if self.objective is not None:
            obj = tuple(rat(v) for v in self.objective)
            object.__setattr__(self, "objective", obj)
            if rows and len(obj) != len(rows[0]):
                raise ValueError("objective length does not match column count")
        if self.sense is Sense.MAXIMIZE and self.objective is None:
            raise ValueError("Maximize sense needs an objective")

    @property
    def num_rows(self) -> int:
        return len(self.b)

    @property
    def num_cols(self) -> int:
        if self.A:
            return len(self.A[0])
        return len(self.objective) if self.objective is not None else 0


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    x: tuple[Fraction, ...] | None = None
    y: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    ray: tuple[Fraction, ...] | None = None


# ---------------------------------------------------------------------------
# Tableau machinery
# ---------------------------------------------------------------------------


class _Tableau:
    """Dense simplex tableau: structural columns, slack columns, optional aux."""

    def __init__(self, lp: LinearProgram):
        self.n = lp.num_cols
        self.r = lp.num_rows
        self.rows: list[list[Fraction]] = []
        for i in range(self.r):
            row = list(lp.A[i]) + [ZERO] * (self.n - len(lp.A[i]))
            slack = [ONE if j == i else ZERO for j in range(self.r)]
            self.rows.append(row + slack + [lp.b[i]])
        self.basis = [self.n + i for i in range(self.r)]
        self.ncols = self.n + self.r  # not counting rhs
        self.obj: list[Fraction] = []  # reduced costs per column
        self.obj_value = ZERO
        self.cost: list[Fraction] = []  # cost vector over all columns

    def rhs(self, i: int) -> Fraction:
        return self.rows[i][-1]

    def set_objective(self, cost: list[Fraction]) -> None:
        """Install a cost vector and recompute reduced costs for the current basis."""
        self.cost = cost
        self.obj = []
        for j in range(self.ncols):
            z = sum((cost[self.basis[i]] * self.rows[i][j] for i in range(self.r)), ZERO)
            self.obj.append(cost[j] - z)
        self.obj_value = sum((cost[self.basis[i]] * self.rhs(i) for i in range(self.r)), ZERO)

    def pivot(self, row: int, col: int) -> None:
        piv = self.rows[row][col]
        inv = ONE / piv
        self.rows[row] = [v * inv for v in self.rows[row]]
        for i in range(self.r):
            if i != row and self.rows[i][col] != 0:
                f = self.rows[i][col]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], self.rows[row])]
        if self.obj and self.obj[col] != 0:
            f = self.obj[col]
            self.obj = [a - f * b for a, b in zip(self.obj, self.rows[row][:-1])]
            self.obj_value += f * self.rhs(row)
        self.basis[row] = col

    def run(self) -> int | None:
        """Pivot to optimality under Bland's rule.

        Returns None at optimality, or the entering column index when the
        problem is unbounded in that column's direction.
        """
        while True:
            enter = None
            for j in range(self.ncols):
                if self.obj[j] > 0:
                    enter = j
                    break
            if enter is None:
                return None
            leave = None
            best = None
            for i in range(self.r):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.rhs(i) / a
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return enter
            self.pivot(leave, enter)

    def primal_x(self) -> tuple[Fraction, ...]:
        x = [ZERO] * self.n
        for i, col in enumerate(self.basis):
            if col < self.n:
                x[col] = self.rhs(i)
        return tuple(x)

    def dual_y(self) -> tuple[Fraction, ...]:
        """y_i = z-value of slack column i = (c_B B^-1)_i."""
        return tuple(self.cost[self.n + i] - self.obj[self.n + i] for i in range(self.r))

    def ray(self, enter: int) -> tuple[Fraction, ...]:
        ray = [ZERO] * self.n
        if enter < self.n:
            ray[enter] = ONE
        for i, col in enumerate(self.basis):
            if col < self.n:
                ray[col] = -self.rows[i][enter]
        return tuple(ray)


def _phase_one(tab: _Tableau) -> tuple[Fraction, ...] | None:
    """Drive the tableau to a basic feasible solution.

    Returns None on success, or a Farkas vector when the constraints
    admit no solution. Uses one auxiliary column of -1 in every row.
    """
    if all(tab.rhs(i) >= 0 for i in range(tab.r)):
        return None
    aux = tab.ncols
    for row in tab.rows:
        row.insert(-1, Fraction(-1))
    tab.ncols += 1
    cost = [ZERO] * tab.ncols
    cost[aux] = Fraction(-1)
    tab.set_objective(cost)
    # first pivot: bring the aux variable in at the most negative row
    worst = min(range(tab.r), key=lambda i: (tab.rhs(i), i))
    tab.pivot(worst, aux)
    tab.run()
    if tab.obj_value < 0:
        y = tab.dual_y()
        return y
    # optimum 0: drop the aux variable, repairing the basis if it lingers
    if aux in tab.basis:
        row = tab.basis.index(aux)
        piv_col = next((j for j in range(tab.ncols) if j != aux and tab.rows[row][j] != 0), None)
        if piv_col is None:
            del tab.rows[row]
            del tab.basis[row]
            tab.r -= 1
        else:
            tab.pivot(row, piv_col)
    for row in tab.rows:
        del row[aux]
    tab.ncols -= 1
    return None


def solve(lp: LinearProgram) -> LPOutcome:
    """Exact outcome with embedded certificate; deterministic for a given input."""
    tab = _Tableau(lp)
    farkas = _phase_one(tab)
    if farkas is not None:
        return LPOutcome(status=Status.INFEASIBLE, y=farkas)
    if lp.sense is Sense.FEASIBILITY:
        cost = [ZERO] * tab.ncols
        tab.set_objective(cost)
        return LPOutcome(status=Status.FEASIBLE, x=tab.primal_x())
    cost = [ZERO] * tab.ncols
    for j, cj in enumerate(lp.objective or ()):
        cost[j] = cj
    tab.set_objective(cost)
    enter = tab.run()
    if enter is not None:
        return LPOutcome(status=Status.UNBOUNDED, x=tab.primal_x(), ray=tab.ray(enter))
    return LPOutcome(
        status=Status.OPTIMAL,
        x=tab.primal_x(),
        y=tab.dual_y(),
        value=tab.obj_value,
    )


# ---------------------------------------------------------------------------
# Certificate checking (independent of solver internals)
# ---------------------------------------------------------------------------


def _mat_vec(A: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> list[Fraction]:
    return [sum((aij * xj for aij, xj in zip(row, x)), ZERO) for row in A]


def _vec_mat(y: Sequence[Fraction], A: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    if not A:
        return []
    return [sum((y[i] * A[i][j] for i in range(len(A))), ZERO) for j in range(len(A[0]))]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def verify_certificate(lp: LinearProgram, out: LPOutcome) -> bool:
    """Re-check every certificate inequality with fresh exact arithmetic."""
    if out.status is Status.FEASIBLE:
        if out.x is None or len(out.x) != lp.num_cols:
            return False
        if any(v < 0 for v in out.x):
            return False
        return all(lhs <= rhs for lhs, rhs in zip(_mat_vec(lp.A, out.x), lp.b))
    if out.status is Status.INFEASIBLE:
        if out.y is None or len(out.y) != lp.num_rows:
            return False
        if any(v < 0 for v in out.y):
            return False
        if any(v < 0 for v in _vec_mat(out.y, lp.A)):
            return False
        return _dot(out.y, lp.b) < 0
    if out.status is Status.OPTIMAL:
        if lp.objective is None or out.x is None or out.y is None or out.value is None:
            return False
        primal = LPOutcome(status=Status.FEASIBLE, x=out.x)
        if not verify_certificate(lp, primal):
            return False
        if any(v < 0 for v in out.y):
            return False
        yA = _vec_mat(out.y, lp.A)
        if any(yA[j] < lp.objective[j] for j in range(lp.num_cols)):
            return False
        return _dot(lp.objective, out.x) == out.value == _dot(out.y, lp.b)
    if out.status is Status.UNBOUNDED:
        if lp.objective is None or out.x is None or out.ray is None:
            return False
        primal = LPOutcome(status=Status.FEASIBLE, x=out.x)
        if not verify_certificate(lp, primal):
            return False
        if any(v < 0 for v in out.ray):
            return False
        if any(v > 0 for v in _mat_vec(lp.A, out.ray)):
            return False
        return _dot(lp.objective, out.ray) > 0
    return False


# ---------------------------------------------------------------------------
# Normalization into the fixed standard form
# ---------------------------------------------------------------------------


def standard_form(
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    objective: Sequence | None = None,
    free_vars: Sequence[int] = (),
    sense: Sense = Sense.FEASIBILITY,
):
    """Convert a program with equalities and free variables to standard form.

    Each equality row becomes a <= / >= pair; each free variable x_j is
    split into a difference u_j - v_j of nonnegative parts. Returns the
    standard LinearProgram and a function mapping its solution vector
    back to the original variables.
    """
    ncols = 0
    for mat in (A_ub, A_eq):
        for row in mat:
            ncols = max(ncols, len(row))
    if objective is not None:
        ncols = max(ncols, len(objective))
    free = set(free_vars)
    col_map: list[tuple[int, int]] = []  # original index -> (plus col, minus col or -1)
    std_cols = 0
    for j in range(ncols):
        if j in free:
            col_map.append((std_cols, std_cols + 1))
            std_cols += 2
        else:
            col_map.append((std_cols, -1))
            std_cols += 1

    def expand(row: Sequence) -> list[Fraction]:
        out = [ZERO] * std_cols
        for j, v in enumerate(row):
            v = rat(v)
            plus, minus = col_map[j]
            out[plus] = v
            if minus >= 0:
                out[minus] = -v
        return out

    rows: list[list[Fraction]] = [expand(row) for row in A_ub]
    rhs: list[Fraction] = [rat(v) for v in b_ub]
    for row, v in zip(A_eq, b_eq):
        e = expand(row)
        rows.append(e)
        rhs.append(rat(v))
        rows.append([-a for a in e])
        rhs.append(-rat(v))
    obj = tuple(expand(objective)) if objective is not None else None
    lp = LinearProgram(A=tuple(tuple(r) for r in rows), b=tuple(rhs), objective=obj, sense=sense)

    def recover(x_std: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = []
        for plus, minus in col_map:
            v = x_std[plus]
            if minus >= 0:
                v = v - x_std[minus]
            out.append(v)
        return tuple(out)

    return lp, recover
