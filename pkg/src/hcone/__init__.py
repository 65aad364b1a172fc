"""Exact computations in the cone of h-vectors of k[x,y] with deg x = 1, deg y = n."""

__version__ = "0.1.0"

from .core import (
    HConeError,
    HVector,
    ParseError,
    format_hvector,
    format_rational,
    leq_pointwise,
    linear_combine,
    parse_hvector,
    parse_rational,
)
from .decompose import (
    InternalInvariantError,
    Member,
    NotMember,
    chain_check,
    decompose,
    strip_max,
    validate_decomposition,
)
from .diagram import (
    HDiagram,
    NotOSequenceError,
    Staircase,
    check_hdiagram,
    extract_levels,
    lex_segment,
    render_hdiagram,
    render_staircase,
    staircase_hvector,
)
from .generators import (
    Decomposition,
    Glued,
    Max,
    Tower,
    enumerate_ex,
    expand,
    s_vector,
    star,
    t_vector,
    tower_decomposition,
)
from .oracle import is_extremal_oracle, lp_feasible, membership_oracle

__all__ = [
    "chain_check",
    "check_hdiagram",
    "decompose",
    "Decomposition",
    "enumerate_ex",
    "expand",
    "extract_levels",
    "format_hvector",
    "format_rational",
    "Glued",
    "HConeError",
    "HDiagram",
    "HVector",
    "InternalInvariantError",
    "is_extremal_oracle",
    "leq_pointwise",
    "lex_segment",
    "linear_combine",
    "lp_feasible",
    "Max",
    "Member",
    "membership_oracle",
    "NotMember",
    "NotOSequenceError",
    "parse_hvector",
    "parse_rational",
    "ParseError",
    "render_hdiagram",
    "render_staircase",
    "s_vector",
    "Staircase",
    "staircase_hvector",
    "star",
    "strip_max",
    "t_vector",
    "Tower",
    "tower_decomposition",
    "validate_decomposition",
]
