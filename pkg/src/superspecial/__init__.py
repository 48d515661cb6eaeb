"""Exact arithmetic and verification tools for superspecial genus-2 curves over F_{p^2}."""

from .ff import Fp2, Fp2Element, field
from .poly import Polynomial
from .curves import (
    HyperellipticCurve,
    Kind,
    LegendreCurve,
    SingularCurveError,
    cartier_manin,
    classify,
    count_points,
    is_superspecial,
)
from .rosenhain import RosenhainTriple, canonical_key, orbit_120
from .census import algorithm1, brute_force_census

__all__ = [
    "Fp2", "Fp2Element", "field", "Polynomial", "HyperellipticCurve", "Kind", "LegendreCurve",
    "SingularCurveError", "cartier_manin", "classify", "count_points", "is_superspecial",
    "RosenhainTriple", "canonical_key", "orbit_120", "algorithm1", "brute_force_census",
]
