"""Exhaustive and randomized cross-checks, shared by the CLI and the test-suite.

Each property returns a :class:`PropertyResult`; the sweep is deterministic for
fixed bounds and seed (randomness comes from one seeded ``random.Random``).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .core import HVector, format_rational, linear_combine
from .decompose import Member, chain_check, decompose, validate_decomposition
from .diagram import HDiagram, extract_levels, staircase_hvector
from .generators import Decomposition, Max, enumerate_ex, expand, point_label, s_coeff, tower_decomposition
from .oracle import (
    LinearSystem,
    cone_membership_via_ex,
    is_extremal_oracle,
    lp_feasible,
    membership_oracle,
)
from .oracle import fourier_motzkin

MAX_CASES = 10**6
FM_ROW_CAP = 5000


class SweepTooLarge(ValueError):
    pass


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)  # (description, reproduction command)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str, repro: str = "") -> None:
        self.failures.append((what, repro))


@dataclass
class Report:
    bounds: dict
    results: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def render(self, max_failures: int = 5) -> str:
        b = self.bounds
        lines = [
            f"selftest n_max={b['n_max']} d_max={b['d_max']} entry_max={b['entry_max']} seed={b['seed']}"
        ]
        for r in self.results:
            lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name} cases={r.cases} failures={len(r.failures)}")
            for what, repro in r.failures[:max_failures]:
                lines.append(f"  - {what}" + (f"  [repro: {repro}]" if repro else ""))
        lines.append("all properties pass" if self.ok else "FAILED")
        return "\n".join(lines)


def _hstr(h) -> str:
    return ",".join(format_rational(x) for x in h) or "0"


def sweep_vectors(d_max: int, entry_max: int) -> Iterator[HVector]:
    """All integer vectors of length ``d_max + 1`` with entries ``0..entry_max``."""
    for vals in itertools.product(range(entry_max + 1), repeat=d_max + 1):
        yield HVector(vals)


def count_cases(n_max: int, d_max: int, entry_max: int) -> int:
    return n_max * (entry_max + 1) ** (d_max + 1)


def _classify(args):
    """One sweep case; top-level so a process pool can pickle it."""
    n, vals = args
    h = HVector(vals)
    try:
        cert = decompose(n, h, verify=False)
        algo = isinstance(cert, Member)
        recon = validate_decomposition(n, h, cert.decomposition) if algo else None
        chain = chain_check(n, cert.decomposition) if algo else None
        error = None
    except Exception as exc:  # reported, never swallowed silently
        algo, recon, chain, error = None, None, None, f"{type(exc).__name__}: {exc}"
    lp = membership_oracle(n, h).member
    via_ex = cone_membership_via_ex(n, h).member
    return n, tuple(vals), algo, recon, chain, lp, via_ex, error


def run_selftest(
    n_max: int,
    d_max: int,
    entry_max: int,
    seed: int = 0,
    *,
    force: bool = False,
    workers: int = 1,
    random_cases: int = 200,
) -> Report:
    if n_max < 1 or d_max < 0 or entry_max < 0:
        raise ValueError("bounds must satisfy n_max >= 1, d_max >= 0, entry_max >= 0")
    total = count_cases(n_max, d_max, entry_max)
    if total > MAX_CASES and not force:
        raise SweepTooLarge(f"{total} sweep cases exceed {MAX_CASES}; pass --force to run anyway")
    rng = random.Random(seed)
    results = []

    verdict = PropertyResult("verdict-equivalence (decompose vs h-diagram LP)")
    oracles = PropertyResult("oracle-agreement (h-diagram LP vs Ex combination LP)")
    recons = PropertyResult("member-certificates-reconstruct")
    chains = PropertyResult("member-certificates-are-chains")
    no_reduced = PropertyResult("no-reduced-vector-at-d=-1-mod-n")
    bound = PropertyResult("accepted-h-bounded-by-h0*s")
    accepted: dict[int, list[HVector]] = {}

    cases = [(n, vals) for n in range(1, n_max + 1)
             for vals in itertools.product(range(entry_max + 1), repeat=d_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_classify, cases, chunksize=64))
    else:
        outcomes = [_classify(c) for c in cases]

    for n, vals, algo, recon, chain, lp, via_ex, error in outcomes:
        h = HVector(vals)
        repro = f"hcone decompose -n {n} --h {_hstr(h)} --check-oracle"
        verdict.cases += 1
        oracles.cases += 1
        if error is not None:
            verdict.fail(f"n={n} h={_hstr(h)}: {error}", repro)
            continue
        if algo != lp:
            verdict.fail(f"n={n} h={_hstr(h)}: algorithm says {algo}, LP says {lp}", repro)
        if lp != via_ex:
            oracles.fail(f"n={n} h={_hstr(h)}: h-diagram LP {lp}, Ex combination LP {via_ex}")
        if algo:
            recons.cases += 1
            if not recon:
                recons.fail(f"n={n} h={_hstr(h)}", repro)
            chains.cases += 1
            if not chain:
                chains.fail(f"n={n} h={_hstr(h)}", repro)
            accepted.setdefault(n, []).append(h)
            bound.cases += 1
            if any(h.get(i) > h.get(0) * s_coeff(n, i) for i in range(len(h))):
                bound.fail(f"n={n} h={_hstr(h)}")
        d = h.degree
        if d >= 0 and d % n == n - 1 and any(h.get(k) == 0 for k in range(d)):
            no_reduced.cases += 1
            if algo or lp:
                no_reduced.fail(f"n={n} h={_hstr(h)} accepted (algorithm={algo}, LP={lp})", repro)
    results += [verdict, oracles, recons, chains, no_reduced, bound]

    results.append(_cone_axioms(accepted, rng, random_cases))
    results.append(_generators(n_max, d_max))
    results.append(_towers(n_max))
    results.append(_lp_backends(rng, random_cases))
    results.append(_levels(rng, random_cases, n_max=max(n_max, 1), d_max=max(d_max, 1)))
    return Report(
        bounds={"n_max": n_max, "d_max": d_max, "entry_max": entry_max, "seed": seed},
        results=results,
    )


def _cone_axioms(accepted: dict, rng: random.Random, trials: int) -> PropertyResult:
    res = PropertyResult("cone-axioms (sums and positive multiples stay members)")
    for n in sorted(accepted):
        pool = accepted[n]
        if not pool:
            continue
        for _ in range(trials // max(len(accepted), 1)):
            h, g = rng.choice(pool), rng.choice(pool)
            q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            for label, v in (("h+g", h + g), ("q*h", h.scale(q))):
                res.cases += 1
                if not isinstance(decompose(n, v), Member):
                    res.fail(f"n={n} {label} rejected for h={_hstr(h)} g={_hstr(g)} q={q}",
                             f"hcone member -n {n} --h {_hstr(v)}")
    return res


def _generators(n_max: int, d_max: int) -> PropertyResult:
    res = PropertyResult("generators (extremal and self-decomposing)")
    for n in range(1, n_max + 1):
        for p in enumerate_ex(n, d_max):
            res.cases += 1
            v = expand(n, p)
            cert = decompose(n, v)
            if not isinstance(cert, Member) or cert.decomposition != Decomposition([(1, p)]):
                res.fail(f"n={n} {point_label(p)} does not decompose to itself",
                         f"hcone decompose -n {n} --h {_hstr(v)}")
            if not is_extremal_oracle(n, d_max, p):
                res.fail(f"n={n} {point_label(p)} lies in the cone of the other points of Ex({d_max})")
    return res


def _towers(n_max: int, m_max: int = 8) -> PropertyResult:
    res = PropertyResult("tower-identity (all-ones = sum q_l s^(nl-1))")
    for n in range(1, max(n_max, 1) + 1):
        for m in range(1, m_max + 1):
            res.cases += 1
            dec = tower_decomposition(n, m)
            coeffs = dec.as_dict()
            if coeffs.get(Max(n * m - 1)) != Fraction(1, m) or any(q <= 0 for q in coeffs.values()):
                res.fail(f"n={n} m={m}: bad coefficients {dec!r}")
            if linear_combine((q, expand(n, p)) for q, p in dec) != HVector([1] * (n * m)):
                res.fail(f"n={n} m={m}: does not reconstruct the all-ones vector")
    return res


def random_system(rng: random.Random, max_vars: int = 12) -> LinearSystem:
    nv = rng.randint(1, max_vars)
    system = LinearSystem(nv, nonneg=[v for v in range(nv) if rng.random() < 0.5])
    for _ in range(rng.randint(1, 2 * nv + 2)):
        support = rng.sample(range(nv), rng.randint(1, min(nv, 4)))
        row = {v: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for v in support}
        relation = ">=" if rng.random() < 0.7 else "="
        system.add(row, relation, Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return system


def _lp_backends(rng: random.Random, trials: int) -> PropertyResult:
    res = PropertyResult("lp-backends-agree (Fourier-Motzkin vs simplex)")
    for k in range(trials):
        system = random_system(rng)
        try:
            a = fourier_motzkin.feasible(system, max_rows=FM_ROW_CAP).feasible
        except fourier_motzkin.EliminationBlowup:
            continue  # elimination too large to finish; not evidence either way
        res.cases += 1
        b = lp_feasible(system, backend="simplex").feasible
        if a != b:
            res.fail(f"random system #{k}: FM={a}, simplex={b}")
    return res


def random_hdiagram(rng: random.Random, n: int, d: int, max_den: int = 6) -> HDiagram:
    """Cell heights chosen one at a time under the row/column caps."""
    cells = {}
    top = Fraction(rng.randint(1, 3 * max_den), rng.randint(1, max_den))
    for b in range(d // n + 1):
        for a in range(d - n * b + 1):
            cap = top
            if a:
                cap = min(cap, cells.get((a - 1, b), Fraction(0)))
            if b:
                cap = min(cap, cells.get((a, b - 1), Fraction(0)))
            if cap <= 0 or rng.random() < 0.15:
                cells[(a, b)] = Fraction(0)
                continue
            den = rng.randint(1, max_den)
            k = int(cap * den)
            x = Fraction(rng.randint(0, k), den)
            if rng.random() < 0.3:
                x = cap
            cells[(a, b)] = x
    return HDiagram.from_cells(n, cells)


def _levels(rng: random.Random, trials: int, n_max: int, d_max: int) -> PropertyResult:
    res = PropertyResult("level-extraction (exact reconstruction, nested footprints)")
    for k in range(trials):
        n = rng.randint(1, min(n_max, 4))
        d = rng.randint(0, max(d_max, 1))
        diag = random_hdiagram(rng, n, d)
        res.cases += 1
        levels = extract_levels(diag)
        total = linear_combine((q, staircase_hvector(n, s)) for q, s in levels)
        if total != diag.hvector():
            res.fail(f"random diagram #{k}: levels sum to {_hstr(total)}")
        for (_, lower), (_, upper) in zip(levels, levels[1:]):
            if not lower.contains(upper):
                res.fail(f"random diagram #{k}: footprints not nested")
    return res
