"""Maximal vectors, towers, glueing, and the catalogue of extremal points.

Grading convention throughout: ``deg(x) = 1`` and ``deg(y) = n``.  A degree
``d`` is written ``d = n*m + r`` with ``0 <= r <= n - 1``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .core import HConeError, HVector, format_rational, hvector_to_json, linear_combine, to_rational

__all__ = [
    "Max",
    "Tower",
    "Glued",
    "ExtremalPoint",
    "Decomposition",
    "check_grading",
    "s_coeff",
    "s_vector",
    "t_vector",
    "star",
    "canonical",
    "validate_point",
    "expand",
    "enumerate_ex",
    "tower_decomposition",
    "point_label",
    "point_to_json",
    "point_from_json",
    "chain_order",
    "format_decomposition",
    "decomposition_to_json",
    "decomposition_from_json",
]


@dataclass(frozen=True)
class Max:
    d: int

    @property
    def degree(self) -> int:
        return self.d


@dataclass(frozen=True)
class Tower:
    d: int

    @property
    def degree(self) -> int:
        return self.d


@dataclass(frozen=True)
class Glued:
    d: int
    inner: "ExtremalPoint"

    @property
    def degree(self) -> int:
        return self.d


ExtremalPoint = Union[Max, Tower, Glued]


def check_grading(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise HConeError(f"grading weight n must be a positive integer, got {n!r}")
    return n


def s_coeff(n: int, i: int) -> Fraction:
    """Entry of the maximal vector in degree ``i``; 1 for negative ``i``."""
    if i < 0:
        return Fraction(1)
    return Fraction(i // n + 1)


def s_vector(n: int, d: int) -> HVector:
    check_grading(n)
    if d < 0:
        raise HConeError(f"degree must be non-negative, got {d}")
    return HVector(s_coeff(n, i) for i in range(d + 1))


def t_vector(n: int, d: int) -> HVector:
    """The tower: the (r+1) x (m+1) rectangle staircase of degree d."""
    check_grading(n)
    if d < 0:
        raise HConeError(f"degree must be non-negative, got {d}")
    r = d % n
    return HVector(1 if i % n <= r else 0 for i in range(d + 1))


def glue_room(n: int, d: int) -> int:
    """Largest degree an h-vector may have to be glued onto ``t^d``."""
    m, r = divmod(d, n)
    return n * m - r - 3


def star(n: int, d: int, h: Iterable) -> HVector:
    """``t^d * h``: glue ``h`` onto the right of the tower of degree ``d``."""
    check_grading(n)
    h = h if isinstance(h, HVector) else HVector(h)
    if d < 0:
        raise HConeError(f"degree must be non-negative, got {d}")
    r = d % n
    if r == n - 1:
        raise HConeError(f"cannot glue onto t^{d}: d = n-1 mod n (n={n})")
    room = glue_room(n, d)
    if h.degree > room:
        raise HConeError(f"h has degree {h.degree} but t^{d} only admits degree <= {room}")
    out = list(t_vector(n, d).padded(d + 1))
    for k, x in enumerate(h):
        out[r + 1 + k] += x
    return HVector(out)


def canonical(n: int, p: ExtremalPoint) -> ExtremalPoint:
    """Rename ``p`` so equal expansions get equal names (Max > Tower > Glued)."""
    if isinstance(p, Tower) and p.d <= n - 1:
        return Max(p.d)
    if isinstance(p, Glued):
        return Glued(p.d, canonical(n, p.inner))
    return p


def validate_point(n: int, p: ExtremalPoint) -> None:
    check_grading(n)
    if not isinstance(p, (Max, Tower, Glued)):
        raise HConeError(f"not an extremal point: {p!r}")
    if p.d < 0:
        raise HConeError(f"negative degree in {point_label(p)}")
    if isinstance(p, Max):
        return
    r = p.d % n
    if r == n - 1:
        raise HConeError(f"{point_label(p)}: towers of degree = n-1 mod n are not extremal")
    if isinstance(p, Tower):
        if p.d < n:
            raise HConeError(f"{point_label(p)} coincides with s^{p.d}; use Max")
        return
    room = glue_room(n, p.d)
    if room < 0:
        raise HConeError(f"{point_label(p)}: nothing can be glued onto t^{p.d}")
    validate_point(n, p.inner)
    if p.inner.degree > room:
        raise HConeError(f"{point_label(p)}: inner degree {p.inner.degree} exceeds {room}")


def expand(n: int, p: ExtremalPoint) -> HVector:
    validate_point(n, p)
    return _expand(n, p)


def _expand(n: int, p: ExtremalPoint) -> HVector:
    if isinstance(p, Max):
        return s_vector(n, p.d)
    if isinstance(p, Tower):
        return t_vector(n, p.d)
    return star(n, p.d, _expand(n, p.inner))


_KIND_ORDER = {Max: 0, Tower: 1, Glued: 2}


def sort_key(p: ExtremalPoint):
    if isinstance(p, Glued):
        return (p.d, 2, sort_key(p.inner))
    return (p.d, _KIND_ORDER[type(p)], ())


_ex_memo: dict[tuple[int, int], frozenset] = {}
_ex_lock = threading.Lock()


def _ex(n: int, d: int) -> frozenset:
    if d < 0:
        return frozenset()
    key = (n, d)
    found = _ex_memo.get(key)
    if found is not None:
        return found
    if d <= n - 1:
        points = frozenset(Max(e) for e in range(d + 1))
    else:
        r = d % n
        points = set(_ex(n, d - 1))
        points.add(Max(d))
        if r != n - 1:
            points.add(Tower(d))
            points.update(Glued(d, v) for v in _ex(n, d - 2 * r - 3))
        points = frozenset(points)
    with _ex_lock:
        _ex_memo.setdefault(key, points)
    return points


def enumerate_ex(n: int, d: int) -> list[ExtremalPoint]:
    """All extremal points of degree <= d, sorted by (degree, kind)."""
    check_grading(n)
    return sorted(_ex(n, d), key=sort_key)


def tower_decomposition(n: int, m: int) -> "Decomposition":
    """Split the all-ones vector of length ``n*m`` into maximal vectors.

    Coefficients follow ``q_m = 1/m``, ``q_l = 1/l - sum_{k>l} q_k``.
    """
    check_grading(n)
    if m < 1:
        raise HConeError(f"m must be >= 1, got {m}")
    q: dict[int, Fraction] = {}
    tail = Fraction(0)
    for ell in range(m, 0, -1):
        q[ell] = Fraction(1, ell) - tail
        tail += q[ell]
    return Decomposition([(q[ell], Max(n * ell - 1)) for ell in range(m, 0, -1)])


class Decomposition:
    """Positive rational combination of distinct extremal points.

    Repeated points are merged and zero coefficients dropped on construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        merged: dict = {}
        for coeff, point in terms:
            q = to_rational(coeff)
            if q < 0:
                raise HConeError(f"negative coefficient {format_rational(q)}")
            merged[point] = merged.get(point, Fraction(0)) + q
        ordered = sorted(merged.items(), key=lambda kv: sort_key(kv[0]), reverse=True)
        self.terms = tuple((q, p) for p, q in ordered if q != 0)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Decomposition):
            return dict((p, q) for q, p in self.terms) == dict((p, q) for q, p in other.terms)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    def as_dict(self) -> dict:
        return {p: q for q, p in self.terms}

    def points(self) -> list:
        return [p for _, p in self.terms]

    def reconstruct(self, n: int) -> HVector:
        return linear_combine((q, expand(n, p)) for q, p in self.terms)

    def __repr__(self):
        body = " + ".join(f"{format_rational(q)}*{point_label(p)}" for q, p in self.terms)
        return f"Decomposition({body or '0'})"


# -- naming and JSON ---------------------------------------------------------

def point_label(p: ExtremalPoint) -> str:
    """Human name in the ``t^9*t^4*s^0`` style."""
    if isinstance(p, Max):
        return f"s^{p.d}"
    if isinstance(p, Tower):
        return f"t^{p.d}"
    return f"t^{p.d}*{point_label(p.inner)}"


def point_to_json(p: ExtremalPoint) -> dict:
    if isinstance(p, Max):
        return {"kind": "max", "d": p.d}
    if isinstance(p, Tower):
        return {"kind": "tower", "d": p.d}
    return {"kind": "glued", "d": p.d, "inner": point_to_json(p.inner)}


def point_from_json(obj: dict) -> ExtremalPoint:
    try:
        kind, d = obj["kind"], obj["d"]
    except (KeyError, TypeError):
        raise HConeError(f"malformed extremal point {obj!r}") from None
    if isinstance(d, bool) or not isinstance(d, int):
        raise HConeError(f"degree must be an integer in {obj!r}")
    if kind == "max":
        return Max(d)
    if kind == "tower":
        return Tower(d)
    if kind == "glued":
        if "inner" not in obj:
            raise HConeError(f"glued point without inner: {obj!r}")
        return Glued(d, point_from_json(obj["inner"]))
    raise HConeError(f"unknown point kind {kind!r}")


def chain_order(n: int, dec: Decomposition) -> list[tuple[Fraction, ExtremalPoint]]:
    """Terms largest first; for a chain this is the pointwise order."""
    return sorted(dec.terms, key=lambda t: (sum(_expand(n, t[1])), sort_key(t[1])), reverse=True)


def format_decomposition(n: int, dec: Decomposition) -> str:
    parts = []
    for q, p in chain_order(n, dec):
        parts.append(point_label(p) if q == 1 else f"{format_rational(q)}*{point_label(p)}")
    return " + ".join(parts) or "0"


def decomposition_to_json(n: int, dec: Decomposition) -> list:
    return [
        {
            "coeff": format_rational(q),
            "point": point_to_json(p),
            "expansion": hvector_to_json(expand(n, p)),
        }
        for q, p in chain_order(n, dec)
    ]


def decomposition_from_json(items: list) -> Decomposition:
    terms = []
    for item in items:
        terms.append((to_rational(str(item["coeff"])), point_from_json(item["point"])))
    return Decomposition(terms)
