"""Exact h-vectors: parsing, formatting, the pointwise order and linear combinations.

Every coordinate is a :class:`fractions.Fraction`.  No floats are accepted
anywhere; a float sneaking into an h-vector is a bug, so it raises.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "HVector",
    "HConeError",
    "ParseError",
    "to_rational",
    "format_rational",
    "parse_rational",
    "parse_hvector",
    "format_hvector",
    "hvector_to_json",
    "leq_pointwise",
    "linear_combine",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_TOKEN = re.compile(r"^[+]?\d+(?:/\d+)?$")


class HConeError(ValueError):
    """Base class for user-facing mathematical errors."""


class ParseError(HConeError):
    def __init__(self, token: str, reason: str):
        super().__init__(f"cannot parse {token!r}: {reason}")
        self.token = token
        self.reason = reason


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # gmpy2.mpq and friends expose numerator/denominator
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise TypeError(f"not a rational: {value!r}") from None


def parse_rational(token: str, *, allow_negative: bool = False) -> Fraction:
    text = token.strip()
    sign = 1
    if text.startswith("-"):
        if not allow_negative:
            raise ParseError(token, "negative value")
        sign, text = -1, text[1:].strip()
    if not _TOKEN.match(text):
        raise ParseError(token, "expected an integer or p/q")
    num, _, den = text.lstrip("+").partition("/")
    if den and int(den) == 0:
        raise ParseError(token, "zero denominator")
    return sign * Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class HVector(tuple):
    """Immutable, non-negative, trailing-zero-trimmed tuple of Fractions.

    Indexing past the end is an ``IndexError`` as for any tuple; use
    :meth:`get` for the zero-padded reading.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[RationalLike] = ()):
        values = [to_rational(e) for e in entries]
        for i, v in enumerate(values):
            if v < 0:
                raise HConeError(f"negative entry {format_rational(v)} at degree {i}")
        while values and values[-1] == 0:
            values.pop()
        return super().__new__(cls, values)

    @property
    def degree(self) -> int:
        """Index of the last nonzero entry; -1 for the zero vector."""
        return len(self) - 1

    def get(self, i: int) -> Fraction:
        if 0 <= i < len(self):
            return self[i]
        return Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        return [self.get(i) for i in range(length)]

    def __add__(self, other):  # tuple concatenation would be a silent trap
        if not isinstance(other, HVector):
            return NotImplemented
        size = max(len(self), len(other))
        return HVector(self.get(i) + other.get(i) for i in range(size))

    def scale(self, q: RationalLike) -> "HVector":
        q = to_rational(q)
        return HVector(q * x for x in self)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self)

    def __repr__(self) -> str:
        return f"HVector({format_hvector(self)})"


def parse_hvector(text: str) -> HVector:
    """Parse ``"3,3,2,4"`` / ``"1/2, 0"`` or a JSON array like ``["1/2", 3]``."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(text, f"invalid JSON array ({exc.msg})") from None
        if not isinstance(items, list):
            raise ParseError(text, "expected a JSON array")
        tokens = []
        for item in items:
            if isinstance(item, bool) or not isinstance(item, (int, str)):
                raise ParseError(json.dumps(item), "entries must be integers or 'p/q' strings")
            tokens.append(str(item))
    elif not stripped:
        tokens = []
    else:
        tokens = stripped.split(",")
    return HVector(parse_rational(tok) for tok in tokens)


def format_hvector(h: Sequence[Fraction]) -> str:
    return "(" + ",".join(format_rational(x) for x in h) + ")"


def hvector_to_json(h: Sequence[Fraction]) -> list:
    return [x.numerator if x.denominator == 1 else format_rational(x) for x in h]


def leq_pointwise(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """``a <= b`` in every coordinate after zero padding."""
    size = max(len(a), len(b))
    for i in range(size):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        if ai > bi:
            return False
    return True


def linear_combine(terms: Iterable[tuple[RationalLike, Sequence[Fraction]]]) -> HVector:
    acc: list[Fraction] = []
    for coeff, vec in terms:
        q = to_rational(coeff)
        if q < 0:
            raise HConeError(f"negative coefficient {format_rational(q)}")
        if len(vec) > len(acc):
            acc.extend([Fraction(0)] * (len(vec) - len(acc)))
        for i, x in enumerate(vec):
            acc[i] += q * x
    return HVector(acc)
