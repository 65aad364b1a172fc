"""Membership and chain decomposition of h-vectors.

:func:`decompose` runs a stack machine: strip maximal vectors while possible,
and when the vector becomes *reduced* (an interior zero below a positive top
entry) split off a tower, cut the part of the diagram to the right of it, and
decompose that part recursively under a height budget.  Finished inner levels
are glued back onto the tower (``t^d * v``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .core import HConeError, HVector, leq_pointwise, linear_combine, to_rational
from .generators import (
    Decomposition,
    ExtremalPoint,
    Glued,
    Max,
    Tower,
    _ex,
    canonical,
    check_grading,
    expand,
    s_coeff,
)

__all__ = [
    "Member",
    "NotMember",
    "MembershipCertificate",
    "InternalInvariantError",
    "strip_max",
    "is_reduced",
    "decompose",
    "validate_decomposition",
    "chain_check",
    "certificate_to_json",
]

log = logging.getLogger(__name__)

ZERO = Fraction(0)


class InternalInvariantError(RuntimeError):
    """The algorithm produced something it must never produce."""


@dataclass(frozen=True)
class Member:
    decomposition: Decomposition
    member = True


@dataclass(frozen=True)
class NotMember:
    step: str
    degree: int
    depth: int
    index: Optional[int] = None
    member = False


MembershipCertificate = Union[Member, NotMember]


def _get(h: Sequence[Fraction], j: int) -> Fraction:
    return h[j] if 0 <= j < len(h) else ZERO


def strip_max(n: int, h: Sequence, d: int, budget=None) -> tuple[Fraction, HVector]:
    """Subtract the largest multiple of ``s^d`` that keeps ``h`` non-negative.

    ``budget=None`` means unbounded.  For ``d < 0`` nothing is stripped.
    """
    hv = h if isinstance(h, HVector) else HVector(h)
    q, rest = _strip(n, list(hv), d, None if budget is None else to_rational(budget))
    return q, HVector(rest)


def _strip(n, h, d, budget):
    if d < 0:
        return ZERO, h
    q = min(_get(h, j) / s_coeff(n, j) for j in range(d + 1))
    if budget is not None and budget < q:
        q = budget
    if q:
        h = list(h) + [ZERO] * max(0, d + 1 - len(h))
        for j in range(d + 1):
            h[j] -= q * s_coeff(n, j)
    return q, h


def is_reduced(n: int, h: Sequence, d: int) -> bool:
    if _get(h, d) <= 0:
        return False
    return any(_get(h, k) == 0 for k in range(d))


@dataclass
class _Frame:
    d: int
    r: int
    g: list
    budget: Fraction
    coeffs: dict = field(default_factory=dict)


class _Machine:
    """One run of the decomposition state machine."""

    def __init__(self, n: int, h: HVector):
        self.n = n
        self.d0 = h.degree
        self.h: list = list(h)
        self.d = h.degree
        # depth 0: unbounded budget, represented by None
        self.budget: list = [None]
        self.coeffs: list[dict] = [{}]
        self.frames: list[_Frame] = []
        self.steps = 0
        self.step_limit = 8 * (self.d0 + 2) ** 2 + 16

    @property
    def depth(self) -> int:
        return len(self.frames)

    def record(self, point: ExtremalPoint, q: Fraction) -> None:
        if q == 0:
            return
        if q < 0:
            raise InternalInvariantError(f"negative coefficient {q} for {point}")
        point = canonical(self.n, point)
        table = self.coeffs[-1]
        table[point] = table.get(point, ZERO) + q

    def tick(self):
        self.steps += 1
        if self.steps > self.step_limit:
            raise InternalInvariantError(
                f"step budget {self.step_limit} exceeded (n={self.n}, d0={self.d0})"
            )

    def run(self) -> MembershipCertificate:
        if self.d < 0:
            return Member(Decomposition())
        state = "strip"
        while True:
            self.tick()
            if state == "strip":
                state = self.strip()
            elif state == "advance":
                state = self.advance()
            elif state == "reassemble":
                state = self.reassemble()
            elif isinstance(state, (Member, NotMember)):
                return state
            else:  # pragma: no cover
                raise InternalInvariantError(f"unknown state {state!r}")

    def strip(self):
        n, d, i = self.n, self.d, self.depth
        if d < 0:
            q = ZERO
        else:
            q = min(_get(self.h, j) / s_coeff(n, j) for j in range(d + 1))
        p = self.budget[i]
        if p is not None and not p - q > 0:
            if d >= 0:
                self.record(Max(d), p)
            self.budget[i] = ZERO
            return "reassemble"
        if q < 0:
            raise InternalInvariantError(f"negative strip {q} at degree {d}")
        if p is not None:
            self.budget[i] = p - q
        if d >= 0 and q:
            for j in range(d + 1):
                self.h[j] -= q * s_coeff(n, j)
            self.record(Max(d), q)
        return "advance"

    def advance(self):
        n, d, i = self.n, self.d, self.depth
        if _get(self.h, d) == 0:
            self.d = d = d - 1
            if d >= 1:
                return "strip"
            h0 = _get(self.h, 0)
            if i == 0:
                self.record(Max(0), h0)
                return self.finish()
            p = self.budget[i]
            if h0 <= p:
                self.record(Max(0), h0)
                self.budget[i] = p - h0
            else:
                self.record(Max(0), p)
                self.budget[i] = ZERO
            return "reassemble"

        m, r = divmod(d, n)
        if r == n - 1:
            if i == 0:
                return NotMember("reduced_top", degree=d, depth=0)
            return self.remove_column()

        p = self.budget[i]
        if p is not None and self.h[d] > p:
            self.h[d] = p
        hd = self.h[d]
        g = list(self.h)
        for j in range(d + 1):
            if j % n <= r:
                g[j] -= hd
        for j in range(d + 1):
            if g[j] < 0:
                if i == 0:
                    return NotMember("tower_negative", degree=d, depth=1, index=j)
                log.debug("backtrack at depth %d, degree %d", i + 1, d)
                return self.remove_column()

        self.frames.append(_Frame(d=d, r=r, g=g, budget=hd))
        self.budget.append(hd)
        self.coeffs.append({})
        if p is not None:
            self.budget[i] = p - hd
        self.h = self.cut(g, m, r, d)
        self.d = d - 2 * r - 3
        return "strip"

    def cut(self, g, m, r, d):
        """Everything right of the tower's r+1 columns, as an h-vector."""
        n = self.n
        out = []
        for j in range(d - 2 * r - 2):
            idx = j + r + 1
            k = idx % n
            if k < r:
                out.append(g[idx] - g[m * n + k])
            else:
                out.append(g[idx])
        return out

    def remove_column(self):
        n, d = self.n, self.d
        r = d % n
        hd = self.h[d]
        for j in range(d + 1):
            if j % n == r:
                self.h[j] -= hd
        for j in range(d + 1):
            if self.h[j] < 0:
                return NotMember("column_negative", degree=d, depth=self.depth, index=j)
        self.d = d - 1
        return "strip"

    def reassemble(self):
        frame = self.frames.pop()
        inner = self.coeffs.pop()
        leftover = self.budget.pop()
        h = list(frame.g)
        shift = frame.r + 1
        for v, q in inner.items():
            for k, x in enumerate(expand(self.n, v)):
                h[shift + k] -= q * x
        self.h = h
        for v, q in inner.items():
            self.record(Glued(frame.d, v), q)
        self.record(Tower(frame.d), leftover)
        self.d = frame.d - 1
        return "strip"

    def finish(self) -> Member:
        return Member(Decomposition((q, p) for p, q in self.coeffs[0].items()))


def decompose(n: int, h, *, verify: bool = True) -> MembershipCertificate:
    """Decide whether ``h`` lies in the cone; on success return a chain decomposition."""
    check_grading(n)
    h = h if isinstance(h, HVector) else HVector(h)
    cert = _Machine(n, h).run()
    if verify and isinstance(cert, Member):
        dec = cert.decomposition
        if not validate_decomposition(n, h, dec):
            raise InternalInvariantError(f"decomposition {dec!r} does not reconstruct {h!r}")
        if not chain_check(n, dec):
            raise InternalInvariantError(f"decomposition {dec!r} is not a chain")
    return cert


def validate_decomposition(n: int, target, dec: Decomposition) -> bool:
    check_grading(n)
    target = target if isinstance(target, HVector) else HVector(target)
    catalogue = _ex(n, max(target.degree, 0))
    try:
        terms = list(dec)
        if any(q <= 0 for q, _ in terms):
            return False
        if any(p not in catalogue for _, p in terms):
            return False
        return linear_combine((q, expand(n, p)) for q, p in terms) == target
    except HConeError:
        return False


def chain_check(n: int, dec: Decomposition) -> bool:
    vecs = [expand(n, p) for _, p in dec]
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if not (leq_pointwise(vecs[a], vecs[b]) or leq_pointwise(vecs[b], vecs[a])):
                return False
    return True


def certificate_to_json(n: int, cert: MembershipCertificate) -> dict:
    from .generators import decomposition_to_json

    if isinstance(cert, Member):
        return {"member": True, "terms": decomposition_to_json(n, cert.decomposition)}
    witness = {"step": cert.step, "degree": cert.degree, "depth": cert.depth}
    if cert.index is not None:
        witness["index"] = cert.index
    return {"member": False, "witness": witness}
