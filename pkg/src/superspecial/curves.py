"""Legendre and hyperelliptic curves over F_{p^2}.

Superspeciality is decided by the Cartier-Manin matrix: for y^2 = c f(x) of
genus g the entry (i, j) is the coefficient of x^(i p - j) in
(c f)^((p-1)/2), and the curve is superspecial iff the matrix vanishes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .ff import Fp2, Fp2Element
from .poly import Polynomial

Root = Optional[Fp2Element]  # None stands for the point at infinity

SUPPORTED_GENERA = (1, 2, 3, 4)


class SingularCurveError(ValueError):
    pass


class HyperellipticCurve:
    """y^2 = c * f(x), with f squarefree of degree 2g+1 or 2g+2.

    ``roots`` is kept when the curve was built from its Weierstrass points;
    ``None`` inside it marks the root at infinity (f then has odd degree).
    """

    __slots__ = ("field", "c", "f", "genus", "roots")

    def __init__(self, f: Polynomial, c: Union[int, Fp2Element] = 1, genus: Optional[int] = None,
                 roots: Optional[Tuple[Root, ...]] = None, *, check: bool = True):
        F = f.field
        c = F(c)
        if not c:
            raise SingularCurveError("curve is singular: twist constant is zero")
        d = f.degree
        g = (d - 1) // 2
        if genus is not None and genus != g:
            raise ValueError(f"degree {d} does not give genus {genus}")
        if g not in SUPPORTED_GENERA:
            raise ValueError(f"unsupported genus {g} (degree {d})")
        if check and not f.is_squarefree():
            raise SingularCurveError("curve is singular")
        self.field = F
        self.c = c
        self.f = f
        self.genus = g
        self.roots = roots

    @classmethod
    def from_roots(cls, roots: Sequence[Root], c: Union[int, Fp2Element] = 1,
                   genus: Optional[int] = None, field: Optional[Fp2] = None) -> "HyperellipticCurve":
        finite = [r for r in roots if r is not None]
        F = field or (finite[0].field if finite else None)
        if F is None:
            raise ValueError("cannot infer the field from the roots")
        finite = [F(r) for r in finite]
        if len(roots) - len(finite) > 1:
            raise SingularCurveError("curve is singular: repeated root at infinity")
        if len(set(finite)) != len(finite):
            raise SingularCurveError("curve is singular: repeated roots")
        f = Polynomial.from_roots(F, finite)
        normalized = tuple(None if r is None else F(r) for r in roots)
        return cls(f, c, genus, normalized, check=False)

    @classmethod
    def from_coefficients(cls, field: Fp2, coeffs: Sequence, c=1, genus=None) -> "HyperellipticCurve":
        return cls(Polynomial(field, coeffs), c, genus)

    @property
    def p(self) -> int:
        return self.field.p

    def rhs(self) -> Polynomial:
        return self.f * self.c

    def finite_roots(self) -> Optional[List[Fp2Element]]:
        if self.roots is None:
            return None
        return [r for r in self.roots if r is not None]

    def __repr__(self) -> str:
        return f"HyperellipticCurve(y^2 = {self.c} * ({self.f}), p={self.p}, g={self.genus})"


@dataclass(frozen=True)
class LegendreCurve:
    t: Fp2Element

    def __post_init__(self):
        if self.t == 0 or self.t == 1:
            raise ValueError("singular Legendre parameter")

    def as_hyperelliptic(self) -> HyperellipticCurve:
        F = self.t.field
        return HyperellipticCurve.from_roots([F.zero, F.one, self.t], 1, genus=1)


class Kind(str, enum.Enum):
    MAXIMAL = "Maximal"
    MINIMAL = "Minimal"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    count: int


def cartier_manin(C: HyperellipticCurve) -> List[List[Fp2Element]]:
    p, g = C.p, C.genus
    power = C.rhs() ** ((p - 1) // 2)
    zero = C.field.zero
    return [[power.coefficient(i * p - j) if i * p >= j else zero for j in range(1, g + 1)]
            for i in range(1, g + 1)]


def is_superspecial(C: HyperellipticCurve) -> bool:
    return all(not e for row in cartier_manin(C) for e in row)


def hasse_invariant(t: Fp2Element) -> Fp2Element:
    """H_p(t) = sum_{i<=m} binom(m, i)^2 t^i with m = (p-1)/2."""
    m = (t.field.p - 1) // 2
    acc = t.field.zero
    for i in range(m, -1, -1):
        acc = acc * t + comb(m, i) ** 2
    return acc


def is_supersingular_legendre(E: Union[LegendreCurve, Fp2Element]) -> bool:
    t = E.t if isinstance(E, LegendreCurve) else E
    if t == 0 or t == 1:
        raise ValueError("singular Legendre parameter")
    return not hasse_invariant(t)


def count_points(C: HyperellipticCurve) -> int:
    """Number of F_{p^2}-points of the smooth model, by a character sum."""
    F = C.field
    rhs = C.rhs()
    values = kernels.evaluate_everywhere(F, [(a.c0, a.c1) for a in rhs.coeffs])
    chi = kernels.chi_table(F.p)
    affine = F.order + int(chi[values].sum())
    if rhs.degree % 2 == 1:
        at_infinity = 1
    else:
        at_infinity = 2 if rhs.leading().is_square() else 0
    return affine + at_infinity


def hasse_weil_bounds(p: int, genus: int) -> Tuple[int, int]:
    q = p * p
    return q + 1 - 2 * genus * p, q + 1 + 2 * genus * p


def classify_count(count: int, p: int, genus: int) -> Classification:
    lo, hi = hasse_weil_bounds(p, genus)
    if count == hi:
        kind = Kind.MAXIMAL
    elif count == lo:
        kind = Kind.MINIMAL
    else:
        kind = Kind.NEITHER
    return Classification(kind, count)


def classify(C: HyperellipticCurve) -> Classification:
    return classify_count(count_points(C), C.p, C.genus)


def gluing_parameters(t1: Fp2Element, t2: Fp2Element) -> Tuple[Fp2Element, Fp2Element]:
    """(a, b) with a = (t1/t2)(1-t2)/(1-t1), b = t1/t2."""
    for t in (t1, t2):
        if t == 0 or t == 1:
            raise ValueError("singular Legendre parameter")
    b = t1 / t2
    a = b * (1 - t2) / (1 - t1)
    if a == b or a == 0 or b == 0 or a == 1 or b == 1:
        raise ValueError("degenerate gluing")
    return a, b


def symmetric_curve(*params: Fp2Element) -> HyperellipticCurve:
    """y^2 = (x^2 - 1) * prod (x^2 - a) over the given parameters.

    Two parameters give the genus-2 decomposed family, three the genus-3
    and four the genus-4 families with (Z/2)^2 in the automorphism group.
    Roots are attached when every parameter is a square in F_{p^2}.
    """
    F = params[0].field
    values = [F.one] + [F(a) for a in params]
    if len(set(values)) != len(values) or any(not a for a in values):
        raise SingularCurveError("curve is singular: parameters must be distinct, nonzero and != 1")
    X = Polynomial.x(F)
    f = Polynomial(F, [1])
    for a in values:
        f = f * (X * X - a)
    roots: Optional[Tuple[Root, ...]] = None
    sq = [a.sqrt() for a in values]
    if all(s is not None for s in sq):
        roots = tuple(r for s in sq for r in (s, -s))
    return HyperellipticCurve(f, 1, len(values) - 1, roots, check=False)


def glue_from_legendre_pair(t1: Fp2Element, t2: Fp2Element) -> HyperellipticCurve:
    a, b = gluing_parameters(t1, t2)
    return symmetric_curve(a, b)


def rational_roots(f: Polynomial) -> List[Fp2Element]:
    """Roots of f lying in F_{p^2}, found by evaluating at every element."""
    F = f.field
    values = kernels.evaluate_everywhere(F, [(a.c0, a.c1) for a in f.coeffs])
    return [F.from_key(int(k)) for k in np.flatnonzero(values == 0)]


def with_rational_roots(C: HyperellipticCurve) -> HyperellipticCurve:
    """Same curve with its Weierstrass points attached when they all lie in F_{p^2}.

    The returned model has a monic f; the leading coefficient moves into c.
    """
    if C.roots is not None:
        return C
    roots: List[Root] = list(rational_roots(C.f))
    if len(roots) != C.f.degree:
        return C
    if C.f.degree % 2 == 1:
        roots.append(None)
    return HyperellipticCurve(C.f.monic(), C.c * C.f.leading(), C.genus, tuple(roots), check=False)
