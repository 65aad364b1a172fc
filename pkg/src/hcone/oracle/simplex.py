"""Phase-one simplex over exact rationals with Bland's pivoting rule.

Only feasibility is decided: the auxiliary problem minimizes the sum of
artificial variables.  The tableau is kept fraction-free: integer entries
over one common denominator (the last pivot), Bareiss style, so every
division in a pivot is exact.  Free variables are split as ``x = x+ - x-``; those
declared non-negative keep a single column.  ``>=`` rows whose right side is
non-positive start with their slack in the basis and need no artificial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .._kernels import pivot as kernel_pivot

from .system import EQ, Feasibility, LinearSystem

ZERO = Fraction(0)


def feasible(system: LinearSystem, max_pivots: int = 100000) -> Feasibility:
    # column layout: structural columns, then slacks/surplus, then artificials
    columns: list[tuple[int, int]] = []  # (system var, sign)
    col_of: dict[int, list[tuple[int, int]]] = {}
    for v in range(system.nvars):
        entries = [(len(columns), 1)]
        columns.append((v, 1))
        if v not in system.nonneg:
            entries.append((len(columns), -1))
            columns.append((v, -1))
        col_of[v] = entries
    nstruct = len(columns)

    raw = []  # (integer structural row, slack sign or 0, integer rhs, needs_artificial)
    for c in system.constraints:
        scale = c.rhs.denominator
        for q in c.coeffs.values():
            scale = scale * q.denominator // gcd(scale, q.denominator)
        row = [0] * nstruct
        for v, a in c.coeffs.items():
            k = a.numerator * (scale // a.denominator)
            for col, sign in col_of[v]:
                row[col] = k * sign
        rhs = c.rhs.numerator * (scale // c.rhs.denominator)
        if c.relation == EQ:
            if rhs < 0:
                row = [-a for a in row]
                rhs = -rhs
            raw.append((row, 0, rhs, True))
        elif rhs <= 0:
            raw.append(([-a for a in row], 1, -rhs, False))
        else:
            raw.append((row, -1, rhs, True))

    nslack = sum(1 for _, s, _, _ in raw if s)
    nart = sum(1 for *_, art in raw if art)
    ncols = nstruct + nslack + nart
    first_art = nstruct + nslack

    # each row was scaled to integers; its slack/artificial absorbs the
    # scale factor (only structural values are read back)
    tableau: list[list[int]] = []
    basis: list[int] = []
    slack_col = nstruct
    art_col = first_art
    for row, sign, rhs, art in raw:
        full = row + [0] * (nslack + nart) + [rhs]
        if sign:
            full[slack_col] = sign
            if not art:
                basis.append(slack_col)
            slack_col += 1
        if art:
            full[art_col] = 1
            basis.append(art_col)
            art_col += 1
        tableau.append(full)

    # phase-one objective (minimise the artificials), as reduced costs
    obj = [0] * (ncols + 1)
    for r, b in enumerate(basis):
        if b >= first_art:
            for j, x in enumerate(tableau[r]):
                if x:
                    obj[j] -= x
    for j in range(first_art, ncols):
        obj[j] = 0

    denom = 1
    pivots = 0
    while True:
        # Bland: lowest-index improving column ...
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        # ... and among minimum ratios the lowest-index basic variable
        leave = None
        for r, row in enumerate(tableau):
            a = row[enter]
            if a > 0:
                if leave is None:
                    leave = r
                    continue
                lrow = tableau[leave]
                lhs, rhs_ = row[-1] * lrow[enter], lrow[-1] * a
                if lhs < rhs_ or (lhs == rhs_ and basis[r] < basis[leave]):
                    leave = r
        if leave is None:
            raise AssertionError("phase-one objective unbounded")
        denom = kernel_pivot(tableau, obj, leave, enter, denom)
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot limit exceeded")

    if obj[-1] != 0:
        return Feasibility(False, backend="simplex")
    values = [ZERO] * ncols
    for r, b in enumerate(basis):
        values[b] = Fraction(tableau[r][-1], denom)
    x = [ZERO] * system.nvars
    for col, (v, sign) in enumerate(columns):
        x[v] += sign * values[col]
    witness = tuple(x)
    if not system.check(witness):
        raise AssertionError("simplex witness fails substitution check")
    return Feasibility(True, witness, backend="simplex")
