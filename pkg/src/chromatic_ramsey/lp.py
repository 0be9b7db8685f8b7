"""Exact two-phase simplex over the rationals with Bland's rule as anti-cycling fallback."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceededError

LE, GE, EQ = "<=", ">=", "=="
# consecutive degenerate pivots before falling back to Bland's rule
DEGENERATE_SWITCH = 8


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None
    x: list[Fraction] | None
    pivots: int
    # multipliers with value == b . duals at optimum (>= 0 on the binding side)
    duals: list[Fraction] | None = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int], n_cols: int) -> None:
        self.rows = rows  # each row: n_cols coefficients followed by the rhs
        self.basis = basis
        self.n_cols = n_cols
        self.pivots = 0

    def pivot(self, r: int, col: int, objective: list[Fraction]) -> None:
        prow = self.rows[r]
        p = prow[col]
        if p != 1:
            prow = [v / p if v else v for v in prow]
            self.rows[r] = prow
        nz = [j for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[col]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = objective[col]
        if f:
            for j in nz:
                objective[j] -= f * prow[j]
        self.basis[r] = col
        self.pivots += 1

    def run(self, objective: list[Fraction], allowed: Sequence[bool], max_pivots: int) -> str:
        """Minimise; ``objective`` holds reduced costs and minus the value in its last slot.

        Entering column by most negative reduced cost, switching to Bland's
        lowest-index rule while pivots stay degenerate so cycling cannot occur.
        """
        degenerate_run = 0
        while True:
            candidates = [j for j in range(self.n_cols) if allowed[j] and objective[j] < 0]
            if not candidates:
                return "optimal"
            if degenerate_run >= DEGENERATE_SWITCH:
                col = candidates[0]
            else:
                col = min(candidates, key=lambda j: (objective[j], j))
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            if self.pivots >= max_pivots:
                raise BudgetExceededError(f"simplex exceeded {max_pivots} pivots")
            degenerate_run = degenerate_run + 1 if best[0][0] == 0 else 0
            self.pivot(best[1], col, objective)


def solve_lp(
    c: Sequence,
    a: Sequence[Sequence],
    senses: Sequence[str],
    b: Sequence,
    maximize: bool = False,
    max_pivots: int = 1_000_000,
) -> LPResult:
    """Optimise ``c.x`` subject to ``a[i].x (sense) b[i]`` and ``x >= 0`` exactly."""
    n = len(c)
    m = len(a)
    rows_in = []
    for i in range(m):
        coeffs = [Fraction(v) for v in a[i]]
        rhs = Fraction(b[i])
        sense = senses[i]
        sign_flip = 1
        if rhs < 0:
            sign_flip = -1
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            sense = {LE: GE, GE: LE, EQ: EQ}[sense]
        rows_in.append((coeffs, sense, rhs, sign_flip))

    n_slack = sum(1 for _, s, _, _ in rows_in if s in (LE, GE))
    n_art = sum(1 for _, s, _, _ in rows_in if s in (GE, EQ))
    n_cols = n + n_slack + n_art
    zero = Fraction(0)
    rows: list[list[Fraction]] = []
    basis: list[int] = []
    artificial = [False] * n_cols
    unit_col = []  # column that starts as +e_i, used to read the dual of row i
    next_slack = n
    next_art = n + n_slack
    for coeffs, sense, rhs, _ in rows_in:
        row = coeffs + [zero] * (n_slack + n_art) + [rhs]
        if sense == LE:
            row[next_slack] = Fraction(1)
            basis.append(next_slack)
            unit_col.append(next_slack)
            next_slack += 1
        else:
            if sense == GE:
                row[next_slack] = Fraction(-1)
                next_slack += 1
            row[next_art] = Fraction(1)
            artificial[next_art] = True
            basis.append(next_art)
            unit_col.append(next_art)
            next_art += 1
        rows.append(row)
    tab = _Tableau(rows, basis, n_cols)

    if n_art:
        phase1 = [zero] * (n_cols + 1)
        for i, row in enumerate(rows):
            if artificial[basis[i]]:
                for j in range(n_cols + 1):
                    if row[j] and (j == n_cols or not artificial[j]):
                        phase1[j] -= row[j]
        tab.run(phase1, [True] * n_cols, max_pivots)
        if phase1[-1] != 0:
            return LPResult("infeasible", None, None, tab.pivots)
        # drive remaining (zero-level) artificials out of the basis
        for i in range(len(tab.rows) - 1, -1, -1):
            if artificial[tab.basis[i]]:
                col = next(
                    (j for j in range(n_cols) if not artificial[j] and tab.rows[i][j]), None
                )
                if col is None:
                    del tab.rows[i]
                    del tab.basis[i]
                else:
                    tab.pivot(i, col, [zero] * (n_cols + 1))

    sign = -1 if maximize else 1
    cost = [sign * Fraction(v) for v in c] + [zero] * (n_slack + n_art)
    objective = cost + [zero]
    for i, row in enumerate(tab.rows):
        cb = cost[tab.basis[i]]
        if cb:
            for j in range(n_cols + 1):
                if row[j]:
                    objective[j] -= cb * row[j]
    allowed = [not art for art in artificial]
    status = tab.run(objective, allowed, max_pivots)
    if status == "unbounded":
        return LPResult("unbounded", None, None, tab.pivots)
    x = [zero] * n
    for i, col in enumerate(tab.basis):
        if col < n:
            x[col] = tab.rows[i][-1]
    value = sum((Fraction(c[j]) * x[j] for j in range(n)), zero)
    # reduced cost of a unit column is minus the simplex multiplier of its row
    duals = [-sign * flip * objective[col] for (_, _, _, flip), col in zip(rows_in, unit_col)]
    return LPResult("optimal", value, x, tab.pivots, duals)
