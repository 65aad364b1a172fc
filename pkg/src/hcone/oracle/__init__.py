"""Independent exact-LP ground truth."""

from .cone import OracleResult, cone_membership_via_ex, hdiagram_system, is_extremal_oracle, membership_oracle
from .lp import lp_feasible
from .system import EQ, GE, Constraint, Feasibility, LinearSystem, MalformedSystem

__all__ = [
    "Constraint",
    "EQ",
    "GE",
    "Feasibility",
    "LinearSystem",
    "MalformedSystem",
    "OracleResult",
    "cone_membership_via_ex",
    "hdiagram_system",
    "is_extremal_oracle",
    "lp_feasible",
    "membership_oracle",
]
