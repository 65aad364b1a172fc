"""Fourier-Motzkin elimination with exact back-substitution.

Equalities are used first to substitute variables away (Gaussian step);
the remaining inequalities are eliminated one variable at a time.  Each
derived row is scaled so its left side has primitive integer coefficients,
and rows with the same left side collapse to the tightest one.  That keeps
the blow-up manageable on the small systems this is used for.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional

from .system import EQ, Feasibility, LinearSystem

ZERO = Fraction(0)


class EliminationBlowup(RuntimeError):
    """Raised when the intermediate system grows past ``max_rows``."""


def _normalize(coeffs: dict, rhs: Fraction):
    """Scale ``coeffs . x >= rhs`` by a positive factor so the left side is primitive integer."""
    lcm = 1
    for q in coeffs.values():
        q = Fraction(q)
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    ints = {v: int(a * lcm) for v, a in coeffs.items()}
    g = 0
    for a in ints.values():
        g = gcd(g, abs(a))
    if g > 1:
        ints = {v: a // g for v, a in ints.items()}
    return ints, Fraction(rhs) * lcm / g


def feasible(system: LinearSystem, max_rows: int = 50000) -> Feasibility:
    # rows are (dict var->Fraction, rhs) meaning sum >= rhs
    ineqs: list[tuple[dict, Fraction]] = []
    eqs: list[tuple[dict, Fraction]] = []
    for c in system.all_constraints():
        row = dict(c.coeffs)
        (eqs if c.relation == EQ else ineqs).append((row, c.rhs))

    # substitutions: var = (rhs - sum coeffs*x) / pivot, recorded for back-substitution
    substitutions: list[tuple[int, dict, Fraction]] = []
    while eqs:
        row, rhs = eqs.pop()
        if not row:
            if rhs != 0:
                return Feasibility(False, backend="fourier-motzkin")
            continue
        var = min(row)
        a = row[var]
        expr = {v: -c / a for v, c in row.items() if v != var}
        const = rhs / a

        def subst(r, b):
            if var not in r:
                return r, b
            c = r[var]
            out = {v: x for v, x in r.items() if v != var}
            for v, e in expr.items():
                out[v] = out.get(v, ZERO) + c * e
            out = {v: x for v, x in out.items() if x}
            return out, b - c * const

        eqs = [subst(r, b) for r, b in eqs]
        ineqs = [subst(r, b) for r, b in ineqs]
        substitutions.append((var, expr, const))

    rows = _dedupe(ineqs)
    if rows is None:
        return Feasibility(False, backend="fourier-motzkin")

    stages: list[tuple[int, list, list]] = []
    remaining = sorted({v for r, _ in rows for v in r})
    while remaining:
        # cheapest variable first
        best = None
        for v in remaining:
            pos = sum(1 for r, _ in rows if r.get(v, 0) > 0)
            neg = sum(1 for r, _ in rows if r.get(v, 0) < 0)
            cost = pos * neg - pos - neg
            if best is None or cost < best[0]:
                best = (cost, v)
        var = best[1]
        remaining.remove(var)
        pos = [(r, b) for r, b in rows if r.get(var, 0) > 0]
        neg = [(r, b) for r, b in rows if r.get(var, 0) < 0]
        rest = [(r, b) for r, b in rows if var not in r]
        if len(pos) * len(neg) > 4 * max_rows:
            raise EliminationBlowup(f"{len(pos) * len(neg)} combinations when eliminating x{var}")
        stages.append((var, pos, neg))
        new = list(rest)
        for rp, bp in pos:
            ap = rp[var]
            for rn, bn in neg:
                an = -rn[var]
                combo = {}
                for v, x in rp.items():
                    if v != var:
                        combo[v] = x * an
                for v, x in rn.items():
                    if v != var:
                        combo[v] = combo.get(v, 0) + x * ap
                combo = {v: x for v, x in combo.items() if x}
                new.append((combo, bp * an + bn * ap))
        rows = _dedupe(new)
        if rows is None:
            return Feasibility(False, backend="fourier-motzkin")
        if len(rows) > max_rows:
            raise EliminationBlowup(f"{len(rows)} rows after eliminating x{var}")
        live = {v for r, _ in rows for v in r}
        remaining = [v for v in remaining if v in live]

    x: list[Optional[Fraction]] = [None] * system.nvars

    def val(v):
        return x[v] if x[v] is not None else ZERO

    for var, pos, neg in reversed(stages):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for r, b in pos:
            bound = (b - sum(a * val(v) for v, a in r.items() if v != var)) / r[var]
            lo = bound if lo is None or bound > lo else lo
        for r, b in neg:
            bound = (b - sum(a * val(v) for v, a in r.items() if v != var)) / r[var]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None:
            x[var] = lo
        elif hi is not None:
            x[var] = hi
        else:
            x[var] = ZERO
    for var, expr, const in reversed(substitutions):
        x[var] = const + sum((c * val(v) for v, c in expr.items()), ZERO)
    witness = tuple(val(v) for v in range(system.nvars))
    if not system.check(witness):
        raise AssertionError("Fourier-Motzkin witness fails substitution check")
    return Feasibility(True, witness, backend="fourier-motzkin")


def _dedupe(rows):
    """Drop trivial and duplicate rows; ``None`` signals a contradiction."""
    seen = {}
    for r, b in rows:
        if not r:
            if b > 0:
                return None
            continue
        ints, ib = _normalize(r, b)
        key = tuple(sorted(ints.items()))
        # same left side: keep the tightest right side
        if key not in seen or ib > seen[key]:
            seen[key] = ib
    return [(dict(key), ib) for key, ib in seen.items()]
