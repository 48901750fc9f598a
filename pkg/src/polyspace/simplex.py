"""Exact two-phase simplex over the rationals.

Solves  max c.x  subject to  A x >= b,  x >= 0  with Fraction arithmetic and
Bland's anticycling rule.  Strict-inequality feasibility questions elsewhere
in the package are posed as margin maximization, so a certified optimum here
is a certificate there; floating point could certify neither.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def maximize(objective, constraints):
    """Maximize objective . x over {A x >= b, x >= 0}.

    constraints is a sequence of (coefficients, rhs) pairs.  Returns
    (status, value, x) where status is one of OPTIMAL / INFEASIBLE /
    UNBOUNDED; value and x are None unless OPTIMAL.
    """
    nvars = len(objective)
    rows = []
    rhss = []
    for coeffs, rhs in constraints:
        if len(coeffs) != nvars:
            raise ValueError("constraint of wrong arity")
        row = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        # Normalize to equality form with rhs >= 0.  A >= row with
        # nonnegative rhs needs a surplus (-1) and an artificial; with
        # negative rhs, negating gives a slack (+1) that can start basic.
        if rhs >= 0:
            rows.append((row, -1, True))
            rhss.append(rhs)
        else:
            rows.append(([-c for c in row], 1, False))
            rhss.append(-rhs)

    m = len(rows)
    surplus_base = nvars
    art_cols = {}
    ncols = nvars + m
    for i, (_, _, needs_art) in enumerate(rows):
        if needs_art:
            art_cols[i] = ncols
            ncols += 1

    tableau = []
    basis = []
    for i, (row, s_coef, needs_art) in enumerate(rows):
        full = row + [Fraction(0)] * (ncols - nvars) + [rhss[i]]
        full[surplus_base + i] = Fraction(s_coef)
        if needs_art:
            full[art_cols[i]] = Fraction(1)
            basis.append(art_cols[i])
        else:
            basis.append(surplus_base + i)
        tableau.append(full)

    def pivot(r, c):
        piv = tableau[r][c]
        tableau[r] = [v / piv for v in tableau[r]]
        for i in range(m):
            if i != r:
                f = tableau[i][c]
                if f != 0:
                    tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[r])]
        basis[r] = c

    def run(cost):
        """Minimize cost . (all columns) via Bland's rule; returns status."""
        while True:
            # Reduced costs: cost_j - cost_B . column_j
            reduced = list(cost)
            for i, b in enumerate(basis):
                cb = cost[b]
                if cb != 0:
                    for j in range(ncols):
                        reduced[j] -= cb * tableau[i][j]
            enter = None
            for j in range(ncols):
                if reduced[j] < 0:
                    enter = j
                    break
            if enter is None:
                return OPTIMAL
            leave = None
            best = None
            for i in range(m):
                a = tableau[i][enter]
                if a > 0:
                    ratio = tableau[i][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return UNBOUNDED
            pivot(leave, enter)

    if art_cols:
        art_set = set(art_cols.values())
        phase1 = [Fraction(0)] * ncols
        for c in art_set:
            phase1[c] = Fraction(1)
        run(phase1)
        infeasibility = sum(tableau[i][-1] for i in range(m) if basis[i] in art_set)
        if infeasibility != 0:
            return INFEASIBLE, None, None
        # Pivot remaining (degenerate) artificials out; rows where that is
        # impossible are redundant and get dropped.  Artificial columns come
        # last, so removing them leaves other column indices intact.
        keep = []
        for i in range(m):
            if basis[i] in art_set:
                for j in range(nvars + m):
                    if tableau[i][j] != 0:
                        pivot(i, j)
                        break
            if basis[i] not in art_set:
                keep.append(i)
        tableau = [tableau[i][: nvars + m] + [tableau[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(keep)
        ncols = nvars + m

    cost = [Fraction(0)] * ncols
    for j in range(nvars):
        cost[j] = -Fraction(objective[j])
    status = run(cost)
    if status != OPTIMAL:
        return status, None, None
    x = [Fraction(0)] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = tableau[i][-1]
    value = sum(Fraction(objective[j]) * x[j] for j in range(nvars))
    return OPTIMAL, value, x
