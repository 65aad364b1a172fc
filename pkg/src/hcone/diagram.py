"""h-diagrams, staircases and lex-segment normal forms.

A staircase is a list of row lengths ``lam[0] >= lam[1] >= ...``; row ``b``
holds the monomials ``x^a y^b`` with ``a < lam[b]``, and the box ``(a, b)``
sits in degree ``a + n*b``.

An h-diagram stores, for every row ``j = 1..J``, the heights ``h_i^j`` of its
cells.  Row ``j`` starts in degree ``n*(j-1)``, so ``rows[j-1][c]`` is the
height of the cell in column ``c`` (degree ``c + n*(j-1)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import HConeError, HVector, format_rational, to_rational
from .generators import chain_order, check_grading, expand, s_coeff

__all__ = [
    "HDiagram",
    "Staircase",
    "Validation",
    "NotOSequenceError",
    "check_hdiagram",
    "extract_levels",
    "staircase_hvector",
    "lex_segment",
    "staircase_generators",
    "diagram_from_levels",
    "decomposition_levels",
    "render_staircase",
    "render_hdiagram",
    "monomial_str",
]

ZERO = Fraction(0)


class NotOSequenceError(HConeError):
    def __init__(self, message: str, witness: Optional[tuple[int, int]] = None):
        super().__init__(message)
        self.witness = witness


class Staircase(tuple):
    """Weakly decreasing positive row lengths (trailing zero rows dropped)."""

    __slots__ = ()

    def __new__(cls, rows: Iterable[int] = ()):
        rows = [int(x) for x in rows]
        while rows and rows[-1] == 0:
            rows.pop()
        for b, x in enumerate(rows):
            if x < 1:
                raise HConeError(f"row {b} has non-positive length {x}")
            if b and x > rows[b - 1]:
                raise HConeError(f"row lengths must weakly decrease: {rows}")
        return super().__new__(cls, rows)

    @property
    def boxes(self) -> int:
        return sum(self)

    def cells(self):
        for b, length in enumerate(self):
            for a in range(length):
                yield a, b

    def contains(self, other: "Staircase") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __repr__(self):
        return f"Staircase({list(self)})"


@dataclass(frozen=True)
class HDiagram:
    n: int
    rows: tuple

    def __init__(self, n: int, rows: Iterable[Iterable] = ()):
        check_grading(n)
        clean = []
        for row in rows:
            vals = [to_rational(x) for x in row]
            while vals and vals[-1] == 0:
                vals.pop()
            clean.append(tuple(vals))
        while clean and not clean[-1]:
            clean.pop()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(clean))

    @classmethod
    def from_cells(cls, n: int, cells: dict) -> "HDiagram":
        """Build from ``{(a, b): height}`` keyed by column ``a`` and row ``b`` (0-based)."""
        if not cells:
            return cls(n)
        nrows = max(b for _, b in cells) + 1
        rows = []
        for b in range(nrows):
            width = max((a + 1 for a, bb in cells if bb == b), default=0)
            rows.append([cells.get((a, b), ZERO) for a in range(width)])
        return cls(n, rows)

    def cell(self, j: int, i: int) -> Fraction:
        """Height ``h_i^j`` (row ``j`` is 1-based, ``i`` is a degree)."""
        if j < 1 or j > len(self.rows):
            return ZERO
        c = i - self.n * (j - 1)
        row = self.rows[j - 1]
        return row[c] if 0 <= c < len(row) else ZERO

    @property
    def degree(self) -> int:
        return max((len(row) - 1 + self.n * j for j, row in enumerate(self.rows) if row), default=-1)

    def hvector(self) -> HVector:
        d = self.degree
        return HVector(sum((self.cell(j, i) for j in range(1, len(self.rows) + 1)), ZERO) for i in range(d + 1))

    def heights(self) -> dict:
        return {(a, b): x for b, row in enumerate(self.rows) for a, x in enumerate(row) if x}


@dataclass(frozen=True)
class Validation:
    ok: bool
    condition: Optional[str] = None
    i: Optional[int] = None
    j: Optional[int] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_hdiagram(diag: HDiagram, target: Sequence) -> Validation:
    """Check the row/column monotonicity conditions and the degree sums.

    ``condition`` in a failure is one of ``"nonneg"``, ``"rows"`` (too many
    rows), ``"1"`` (a row increases), ``"2"`` (a column increases upward) or
    ``"sum"``.  ``i`` is always a degree, ``j`` a 1-based row.
    """
    n = diag.n
    J = len(diag.rows)
    for j in range(1, J + 1):
        for c, x in enumerate(diag.rows[j - 1]):
            if x < 0:
                return Validation(False, "nonneg", c + n * (j - 1), j, "negative height")
    d = diag.degree
    if J and J > s_coeff(n, d):
        return Validation(False, "rows", d, J, f"{J} rows exceed s_{d} = {s_coeff(n, d)}")
    for j in range(1, J + 1):
        row = diag.rows[j - 1]
        for c in range(len(row) - 1):
            if row[c] < row[c + 1]:
                return Validation(False, "1", c + n * (j - 1), j, "row increases")
    for j in range(1, J):
        below, above = diag.rows[j - 1], diag.rows[j]
        for c, x in enumerate(above):
            under = below[c] if c < len(below) else ZERO
            if under < x:
                return Validation(False, "2", c + n * (j - 1), j, "column increases upward")
    target = target if isinstance(target, HVector) else HVector(target)
    total = diag.hvector()
    for i in range(max(len(total), len(target))):
        if total.get(i) != target.get(i):
            return Validation(
                False, "sum", i, None,
                f"degree {i}: cells sum to {format_rational(total.get(i))}, "
                f"target {format_rational(target.get(i))}",
            )
    return Validation(True)


def extract_levels(diag: HDiagram) -> list[tuple[Fraction, Staircase]]:
    """Slice the box stack into constant-height slabs, bottom first."""
    v = check_hdiagram(diag, diag.hvector())
    if not v:
        raise HConeError(f"invalid h-diagram: condition {v.condition} at (i={v.i}, j={v.j})")
    thresholds = sorted({x for row in diag.rows for x in row if x > 0})
    levels = []
    previous = ZERO
    for t in thresholds:
        lengths = []
        for row in diag.rows:
            k = 0
            while k < len(row) and row[k] >= t:
                k += 1
            lengths.append(k)
        levels.append((t - previous, Staircase(lengths)))
        previous = t
    return levels


def diagram_from_levels(n: int, levels: Iterable[tuple]) -> HDiagram:
    """Stack staircases with the given heights into one h-diagram."""
    cells: dict = {}
    for q, stair in levels:
        q = to_rational(q)
        stair = stair if isinstance(stair, Staircase) else Staircase(stair)
        for cell in stair.cells():
            cells[cell] = cells.get(cell, ZERO) + q
    return HDiagram.from_cells(n, cells)


def staircase_hvector(n: int, stair: Sequence[int]) -> HVector:
    check_grading(n)
    stair = stair if isinstance(stair, Staircase) else Staircase(stair)
    counts: dict[int, int] = {}
    for a, b in stair.cells():
        counts[a + n * b] = counts.get(a + n * b, 0) + 1
    top = max(counts, default=-1)
    return HVector(counts.get(i, 0) for i in range(top + 1))


def monomial_str(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts) or "1"


def staircase_generators(stair: Staircase) -> list[tuple[int, int]]:
    """Minimal generators ``(a, b)`` of the monomial ideal outside the staircase."""
    gens = []
    for b, length in enumerate(stair):
        if b == 0 or length < stair[b - 1]:
            gens.append((length, b))
    gens.append((0, len(stair)))
    return gens


def lex_segment(n: int, h: Sequence) -> tuple[Staircase, list[str]]:
    """Left-stacked staircase with h-vector ``h`` and its ideal's generators."""
    check_grading(n)
    h = h if isinstance(h, HVector) else HVector(h)
    if not h.is_integral():
        raise HConeError("lex segments need integer entries")
    if h.get(0) != 1:
        raise NotOSequenceError(f"h_0 must be 1, got {format_rational(h.get(0))}")
    chosen = set()
    for i, hi in enumerate(h):
        count = int(hi)
        bound = int(s_coeff(n, i))
        if count > bound:
            raise NotOSequenceError(f"h_{i} = {count} exceeds the {bound} monomials of degree {i}")
        top = i // n
        for b in range(top, top - count, -1):
            chosen.add((i - n * b, b))
    for a, b in sorted(chosen, key=lambda ab: (ab[0] + n * ab[1], -ab[1])):
        for parent in ((a - 1, b), (a, b - 1)):
            if min(parent) >= 0 and parent not in chosen:
                raise NotOSequenceError(
                    f"not a cyclic O-sequence: {monomial_str(a, b)} is chosen "
                    f"but its divisor {monomial_str(*parent)} is not",
                    witness=(a, b),
                )
    nrows = max((b for _, b in chosen), default=-1) + 1
    stair = Staircase(sum(1 for a, bb in chosen if bb == b) for b in range(nrows))
    gens = [monomial_str(a, b) for a, b in staircase_generators(stair)]
    return stair, gens


def decomposition_levels(n: int, dec) -> list[tuple[Fraction, Staircase]]:
    """Each term as (coefficient, lex staircase of its expansion), largest first.

    For a chain these staircases are nested, so stacking them gives an
    h-diagram of the decomposed vector.
    """
    return [(q, lex_segment(n, expand(n, p))[0]) for q, p in chain_order(n, dec)]


# -- rendering -----------------------------------------------------------------

def render_staircase(n: int, stair: Sequence[int], fmt: str = "ascii") -> str:
    """Draw a staircase with each box labelled by its degree, top row first."""
    check_grading(n)
    stair = stair if isinstance(stair, Staircase) else Staircase(stair)
    if fmt == "ascii":
        if not stair:
            return ""
        width = len(str((stair[0] - 1) + n * (len(stair) - 1)))
        lines = []
        for b in reversed(range(len(stair))):
            lines.append(" ".join(str(a + n * b).rjust(width) for a in range(stair[b])).rstrip())
        return "\n".join(lines)
    if fmt == "svg":
        return _svg(n, stair)
    raise HConeError(f"unknown format {fmt!r}")


def _svg(n: int, stair: Staircase, unit: int = 20) -> str:
    width = (stair[0] if stair else 0) * unit
    height = len(stair) * unit
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for a, b in stair.cells():
        x, y = a * unit, height - (b + 1) * unit
        out.append(f'<rect x="{x}" y="{y}" width="{unit}" height="{unit}" fill="none" stroke="black"/>')
        out.append(
            f'<text x="{x + unit // 2}" y="{y + unit // 2}" text-anchor="middle" '
            f'dominant-baseline="central" font-size="{unit // 2}">{a + n * b}</text>'
        )
    out.append("</svg>")
    return "\n".join(out)


def render_hdiagram(diag: HDiagram, fmt: str = "ascii") -> str:
    """List the levels bottom first, each as its height and staircase."""
    if fmt != "ascii":
        raise HConeError(f"unknown format {fmt!r}")
    n = diag.n
    blocks = []
    for k, (q, stair) in enumerate(extract_levels(diag), start=1):
        rows = [
            "".join(f"[{a + n * b}]" for a in range(stair[b]))
            for b in reversed(range(len(stair)))
        ]
        head = f"level {k} (h={format_rational(q)}):"
        if len(rows) == 1:
            blocks.append(f"{head} {rows[0]}")
        else:
            blocks.append("\n".join([head] + ["  " + r for r in rows]))
    return "\n".join(blocks)
