"""Arctic curves of the six-vertex model at roots of unity.

High-precision values are returned as decimal strings next to their float
approximations (keys ending in ``_hp``).
"""

from ._arctic import (
    ArcticError,
    build_p,
    curve,
    discriminant,
    golden_cases,
    params,
    rationalize,
    sample,
    surface,
    verify_golden,
)

__all__ = [
    "ArcticError",
    "build_p",
    "curve",
    "discriminant",
    "golden_cases",
    "params",
    "rationalize",
    "sample",
    "surface",
    "verify_golden",
]
