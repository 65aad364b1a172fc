"""Exact linear systems ``A x (>=|=) b`` over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from ..core import HConeError, to_rational

GE = ">="
EQ = "="


class MalformedSystem(HConeError):
    """Malformed linear system (bad variable index or relation)."""


@dataclass(frozen=True)
class Constraint:
    coeffs: Mapping[int, Fraction]
    relation: str
    rhs: Fraction

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * x[v] for v, a in self.coeffs.items()), Fraction(0))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = self.value(x)
        return lhs == self.rhs if self.relation == EQ else lhs >= self.rhs


class LinearSystem:
    """Variables ``0..nvars-1``; free unless listed in ``nonneg``."""

    def __init__(self, nvars: int, names: Optional[Sequence[str]] = None, nonneg: Iterable[int] = ()):
        if nvars < 0:
            raise MalformedSystem("negative variable count")
        if names is not None and len(names) != nvars:
            raise MalformedSystem(f"{len(names)} names for {nvars} variables")
        self.nvars = nvars
        self.names = list(names) if names is not None else [f"x{k}" for k in range(nvars)]
        self.nonneg = frozenset(nonneg)
        for v in self.nonneg:
            self._check_var(v)
        self.constraints: list[Constraint] = []

    def _check_var(self, v: int) -> None:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.nvars:
            raise MalformedSystem(f"variable index {v!r} out of range 0..{self.nvars - 1}")

    def add(self, coeffs: Union[Mapping[int, object], Sequence[object]], relation: str, rhs) -> None:
        if relation not in (GE, EQ):
            raise MalformedSystem(f"unsupported relation {relation!r}")
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            if len(coeffs) != self.nvars:
                raise MalformedSystem(f"row of length {len(coeffs)} for {self.nvars} variables")
            items = enumerate(coeffs)
        row: dict[int, Fraction] = {}
        for v, a in items:
            self._check_var(v)
            a = to_rational(a) if not isinstance(a, Fraction) else a
            if a:
                row[v] = row.get(v, Fraction(0)) + a
        row = {v: a for v, a in row.items() if a}
        self.constraints.append(Constraint(row, relation, to_rational(rhs)))

    def ge(self, coeffs, rhs) -> None:
        self.add(coeffs, GE, rhs)

    def eq(self, coeffs, rhs) -> None:
        self.add(coeffs, EQ, rhs)

    def all_constraints(self) -> list[Constraint]:
        """Explicit constraints plus ``x_v >= 0`` for declared non-negative variables."""
        extra = [Constraint({v: Fraction(1)}, GE, Fraction(0)) for v in sorted(self.nonneg)]
        return self.constraints + extra

    def check(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.nvars:
            return False
        return all(c.satisfied_by(x) for c in self.all_constraints())

    def __repr__(self):
        return f"LinearSystem({self.nvars} vars, {len(self.constraints)} constraints)"


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[tuple] = None
    backend: str = ""

    def __bool__(self) -> bool:
        return self.feasible
