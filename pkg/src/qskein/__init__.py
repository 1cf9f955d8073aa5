"""Exact symbolic computation of Hecke-algebra actions on knot skein modules,
generalized 3-variable Jones polynomials, and the Brumfiel-Hilden two-bridge
machinery, with a verification CLI."""

from .ring import (
    LaurentPoly,
    RatFuncQ,
    FracMulti,
    NotDivisible,
    NonInvertibleSubstitution,
    exact_div,
    chebyshev,
    nullspace,
)

__all__ = [
    "LaurentPoly",
    "RatFuncQ",
    "FracMulti",
    "NotDivisible",
    "NonInvertibleSubstitution",
    "exact_div",
    "chebyshev",
    "nullspace",
]

__version__ = "0.1.0"
