"""Backend dispatch for exact feasibility."""

from __future__ import annotations

from . import fourier_motzkin, simplex
from .system import Feasibility, LinearSystem

FM_MAX_VARS = 40


def lp_feasible(system: LinearSystem, backend: str = "auto") -> Feasibility:
    """Decide ``exists x: system holds`` exactly; a feasible answer carries a checked witness.

    ``backend`` is ``"fm"``, ``"simplex"`` or ``"auto"`` (Fourier-Motzkin for
    small systems, falling back to simplex if elimination blows up).
    """
    if backend == "fm":
        return fourier_motzkin.feasible(system)
    if backend == "simplex":
        return simplex.feasible(system)
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    if system.nvars <= FM_MAX_VARS:
        try:
            return fourier_motzkin.feasible(system, max_rows=5000)
        except fourier_motzkin.EliminationBlowup:
            pass
    return simplex.feasible(system)
