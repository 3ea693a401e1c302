"""Exact rational LP: dense two-phase simplex with Bland's anti-cycling rule.

Problems are maximizations over x >= 0 with rows of relation "<=", ">="
or "=".  The solver reports an exact optimum with primal solution and
dual multipliers; on infeasibility it reports a Farkas-style witness.
Everything is Fraction arithmetic; no floating point touches the
decision path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

LE, GE, EQ = "<=", ">=", "="


@dataclass
class LinearProgram:
    """maximize c . x  subject to  rows (a, rel, b), x >= 0."""

    n_vars: int
    objective: list[Fraction]
    rows: list[tuple[list[Fraction], str, Fraction]] = field(default_factory=list)

    def add_row(self, a, rel: str, b):
        assert rel in (LE, GE, EQ)
        a = [Fraction(x) for x in a]
        assert len(a) == self.n_vars
        self.rows.append((a, rel, Fraction(b)))


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    objective: Fraction | None = None
    x: list[Fraction] | None = None
    duals: list[Fraction] | None = None        # one per input row, bound convention below
    farkas: list[Fraction] | None = None       # infeasibility multipliers, same convention


def _pivot(tab, basis, r, c):
    pr = tab[r]
    pv = pr[c]
    if pv != 1:
        tab[r] = pr = [x / pv for x in pr]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, pr)]
    basis[r] = c


def _run_simplex(tab, basis, obj, allowed):
    """Maximize obj (list over columns, constant term last) on the tableau.

    obj is given as the z-row in 'z_j - c_j' form already reduced against the
    basis.  Returns 'optimal' or 'unbounded'.  Bland's rule throughout.
    """
    ncols = len(tab[0]) - 1
    while True:
        enter = next((j for j in range(ncols)
                      if allowed[j] and j not in basis and obj[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded"
        _pivot(tab, basis, leave, enter)
        f = obj[enter]
        obj[:] = [a - f * b for a, b in zip(obj, tab[leave])]


def solve_lp(lp: LinearProgram) -> LpResult:
    n = lp.n_vars
    m = len(lp.rows)
    # Normalize to b >= 0, remembering sign flips for the dual report.
    norm = []
    flipped = []
    for a, rel, b in lp.rows:
        if b < 0:
            a = [-x for x in a]
            b = -b
            rel = {LE: GE, GE: LE, EQ: EQ}[rel]
            flipped.append(True)
        else:
            flipped.append(False)
        norm.append((a, rel, b))

    slack_col = [None] * m   # column of the +/-1 slack/surplus of each row
    art_col = [None] * m
    cols = n
    specs = []
    for i, (a, rel, b) in enumerate(norm):
        if rel == LE:
            slack_col[i] = cols
            specs.append(("slack", i))
            cols += 1
        elif rel == GE:
            slack_col[i] = cols
            specs.append(("surplus", i))
            cols += 1
            art_col[i] = cols
            specs.append(("art", i))
            cols += 1
        else:
            art_col[i] = cols
            specs.append(("art", i))
            cols += 1

    tab = []
    basis = [-1] * m
    for i, (a, rel, b) in enumerate(norm):
        row = [Fraction(0)] * (cols + 1)
        row[:n] = [Fraction(x) for x in a]
        if rel == LE:
            row[slack_col[i]] = Fraction(1)
            basis[i] = slack_col[i]
        elif rel == GE:
            row[slack_col[i]] = Fraction(-1)
            row[art_col[i]] = Fraction(1)
            basis[i] = art_col[i]
        else:
            row[art_col[i]] = Fraction(1)
            basis[i] = art_col[i]
        row[-1] = Fraction(b)
        tab.append(row)

    artificials = {c for c in art_col if c is not None}
    allowed1 = [True] * cols

    # Phase 1: maximize -(sum of artificials); z-row reduced against basis.
    obj1 = [Fraction(0)] * (cols + 1)
    for c in artificials:
        obj1[c] = Fraction(1)
    for i, bc in enumerate(basis):
        if bc in artificials:
            obj1 = [a - b for a, b in zip(obj1, tab[i])]
    status = _run_simplex(tab, basis, obj1, allowed1)
    assert status == "optimal"  # phase 1 is bounded below by 0
    if -obj1[-1] != 0:
        # Infeasible; Farkas multipliers from the phase-1 z-row.  Artificial
        # columns carry phase-1 cost -1, so their z-row entries are y_i + 1.
        y = _extract_duals(obj1, slack_col, art_col, m, art_cost=Fraction(-1))
        y = [-yi if fl else yi for yi, fl in zip(y, flipped)]
        return LpResult("infeasible", farkas=y)

    # Drive basic artificials out of the basis; otherwise a degenerate basic
    # artificial at zero can be pushed positive by a phase-2 pivot, silently
    # violating its row.  A row with no nonzero non-artificial entry is
    # redundant and its artificial stays pinned at zero.
    for r in range(m):
        if basis[r] in artificials:
            c = next((j for j in range(cols)
                      if j not in artificials and tab[r][j] != 0), None)
            if c is not None:
                _pivot(tab, basis, r, c)

    # Phase 2: remaining artificials sit on redundant rows and never re-enter.
    allowed2 = [c not in artificials for c in range(cols)]
    obj2 = [Fraction(0)] * (cols + 1)
    for j in range(n):
        obj2[j] = -Fraction(lp.objective[j])
    for i, bc in enumerate(basis):
        if obj2[bc] != 0:
            f = obj2[bc]
            obj2 = [a - f * b for a, b in zip(obj2, tab[i])]
    status = _run_simplex(tab, basis, obj2, allowed2)
    if status == "unbounded":
        return LpResult("unbounded")

    x = [Fraction(0)] * n
    for i, bc in enumerate(basis):
        if bc < n:
            x[bc] = tab[i][-1]
    y = _extract_duals(obj2, slack_col, art_col, m, art_cost=Fraction(0))
    y = [-yi if fl else yi for yi, fl in zip(y, flipped)]
    return LpResult("optimal", objective=obj2[-1], x=x, duals=y)


def _extract_duals(obj, slack_col, art_col, m, art_cost):
    """Row duals from the z-row: slack col (+1) carries y_i, surplus (-1) -y_i,
    artificial (+1, cost art_cost) carries y_i - art_cost."""
    y = [Fraction(0)] * m
    for i in range(m):
        if slack_col[i] is not None:
            v = obj[slack_col[i]]
            y[i] = -v if art_col[i] is not None else v
        else:
            y[i] = obj[art_col[i]] + art_cost
    return y


def verify_dual_bound(lp: LinearProgram, y, bound: Fraction) -> bool:
    """Check that y certifies  c.x <= bound  for every feasible x >= 0.

    Requires y_i >= 0 on '<=' rows, y_i <= 0 on '>=' rows, free on '=',
    sum_i y_i a_i >= c componentwise, and sum_i y_i b_i == bound.
    """
    total = Fraction(0)
    comb = [Fraction(0)] * lp.n_vars
    for yi, (a, rel, b) in zip(y, lp.rows):
        if rel == LE and yi < 0:
            return False
        if rel == GE and yi > 0:
            return False
        total += yi * b
        for j, aj in enumerate(a):
            comb[j] += yi * aj
    if total != bound:
        return False
    return all(cj >= oj for cj, oj in zip(comb, lp.objective))


def verify_farkas(lp: LinearProgram, y) -> bool:
    """Check that y certifies infeasibility: the combination sum_i y_i (row_i)
    has nonnegative coefficients on x but a negative right-hand side."""
    total = Fraction(0)
    comb = [Fraction(0)] * lp.n_vars
    for yi, (a, rel, b) in zip(y, lp.rows):
        if rel == LE and yi < 0:
            return False
        if rel == GE and yi > 0:
            return False
        total += yi * b
        for j, aj in enumerate(a):
            comb[j] += yi * aj
    return all(cj >= 0 for cj in comb) and total < 0
