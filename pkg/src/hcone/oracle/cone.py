"""Brute-force ground truth for membership and extremality.

These checks share nothing with :mod:`hcone.decompose` beyond the vector
constructors: membership is posed directly as the existence of an h-diagram,
and as a non-negative combination over the extremal catalogue.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..core import HConeError, HVector
from ..diagram import HDiagram, check_hdiagram
from ..generators import _ex, check_grading, enumerate_ex, expand, s_coeff
from .lp import lp_feasible
from .system import LinearSystem


@dataclass(frozen=True)
class OracleResult:
    member: bool
    diagram: Optional[HDiagram] = None
    coefficients: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.member


def hdiagram_system(n: int, h: HVector) -> tuple[LinearSystem, dict]:
    """Variables ``h_i^j`` (row j, degree i) with the diagram conditions."""
    d = h.degree
    index: dict[tuple[int, int], int] = {}
    for i in range(d + 1):
        for j in range(1, int(s_coeff(n, i)) + 1):
            index[(j, i)] = len(index)
    names = [f"h_{i}^{j}" for (j, i) in index]
    sys_ = LinearSystem(len(index), names=names, nonneg=range(len(index)))
    for (j, i), v in index.items():
        nxt = index.get((j, i + 1))
        if nxt is not None:
            sys_.ge({v: 1, nxt: -1}, 0)
        up = index.get((j + 1, i + n))
        if up is not None:
            sys_.ge({v: 1, up: -1}, 0)
    for i in range(d + 1):
        sys_.eq({index[(j, i)]: 1 for j in range(1, int(s_coeff(n, i)) + 1)}, h[i])
    return sys_, index


def membership_oracle(n: int, h, backend: str = "simplex") -> OracleResult:
    check_grading(n)
    h = h if isinstance(h, HVector) else HVector(h)
    if h.degree < 0:
        return OracleResult(True, HDiagram(n))
    system, index = hdiagram_system(n, h)
    res = lp_feasible(system, backend=backend)
    if not res:
        return OracleResult(False)
    cells = {(i - n * (j - 1), j - 1): res.witness[v] for (j, i), v in index.items()}
    diag = HDiagram.from_cells(n, cells)
    if not check_hdiagram(diag, h):
        raise AssertionError("oracle witness is not a valid h-diagram")
    return OracleResult(True, diagram=diag)


def _combination_system(vectors: list[HVector], target: HVector) -> LinearSystem:
    length = max([len(target)] + [len(v) for v in vectors])
    system = LinearSystem(len(vectors), nonneg=range(len(vectors)))
    for i in range(length):
        system.eq({k: v.get(i) for k, v in enumerate(vectors)}, target.get(i))
    return system


def cone_membership_via_ex(n: int, h, backend: str = "simplex") -> OracleResult:
    check_grading(n)
    h = h if isinstance(h, HVector) else HVector(h)
    if h.degree < 0:
        return OracleResult(True, coefficients={})
    points = enumerate_ex(n, h.degree)
    vectors = [expand(n, p) for p in points]
    res = lp_feasible(_combination_system(vectors, h), backend=backend)
    if not res:
        return OracleResult(False)
    coeffs = {p: q for p, q in zip(points, res.witness) if q}
    return OracleResult(True, coefficients=coeffs)


def is_extremal_oracle(n: int, d: int, p, backend: str = "simplex") -> bool:
    """``True`` iff ``p`` is not a non-negative combination of the other points of Ex(d).

    ``p`` may be an :class:`ExtremalPoint` from the catalogue or a raw
    h-vector posed as a candidate.
    """
    check_grading(n)
    catalogue = enumerate_ex(n, d)
    if isinstance(p, (tuple, list)) and not hasattr(p, "d"):
        target = HVector(p)
        if target.degree > d:
            raise HConeError(f"candidate has degree {target.degree} > {d}")
        others = [q for q in catalogue if expand(n, q) != target]
    else:
        if p not in _ex(n, d):
            raise HConeError(f"{p!r} is not in Ex({d}) for n={n}")
        target = expand(n, p)
        others = [q for q in catalogue if q != p]
    res = lp_feasible(_combination_system([expand(n, q) for q in others], target), backend=backend)
    return not res.feasible
