"""Richelot (2,2)-isogenies of genus-2 curves via quadratic splittings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .curves import HyperellipticCurve, Root, SingularCurveError
from .ff import Fp2, Fp2Element
from .poly import Polynomial, quadratic_roots


@dataclass(frozen=True)
class QuadraticSplitting:
    """Monic G1, G2, G3 with G1*G2*G3 = f, one per pair of Weierstrass points."""

    pairs: Tuple[Tuple[Root, Root], Tuple[Root, Root], Tuple[Root, Root]]
    G: Tuple[Polynomial, Polynomial, Polynomial]


@dataclass(frozen=True)
class RichelotResult:
    delta: Fp2Element
    curve: Optional[HyperellipticCurve]  # None for the product (delta = 0) case

    @property
    def is_product(self) -> bool:
        return self.curve is None


@dataclass(frozen=True)
class SplittingDiagnostics:
    D1: Fp2Element
    D2: Fp2Element
    D3: Fp2Element


def _pairings(items: List[int]) -> List[List[Tuple[int, int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for tail in _pairings(remaining):
            out.append([(first, other)] + tail)
    return out


PAIRINGS: Tuple[Tuple[Tuple[int, int], ...], ...] = tuple(tuple(x) for x in _pairings(list(range(6))))


def _pair_poly(F: Fp2, a: Root, b: Root) -> Polynomial:
    return Polynomial.from_roots(F, [r for r in (a, b) if r is not None])


def splitting_from_pairs(F: Fp2, pairs: Sequence[Tuple[Root, Root]]) -> QuadraticSplitting:
    G = tuple(_pair_poly(F, a, b) for a, b in pairs)
    return QuadraticSplitting(tuple(tuple(pr) for pr in pairs), G)  # type: ignore[arg-type]


def six_roots(C: HyperellipticCurve) -> List[Root]:
    if C.genus != 2:
        raise ValueError("Richelot isogenies need a genus-2 curve")
    if C.roots is None:
        raise ValueError("roots not rational")
    roots = list(C.roots)
    if len(roots) == 5:
        roots.append(None)
    return roots


def splittings(C: HyperellipticCurve) -> List[QuadraticSplitting]:
    roots = six_roots(C)
    return [splitting_from_pairs(C.field, [(roots[i], roots[j]) for i, j in pairing]) for pairing in PAIRINGS]


def _coeff_rows(s: QuadraticSplitting) -> List[List[Fp2Element]]:
    return [[g.coefficient(2), g.coefficient(1), g.coefficient(0)] for g in s.G]


def delta(s: QuadraticSplitting) -> Fp2Element:
    (a, b, c), (d, e, f), (g, h, i) = _coeff_rows(s)
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def richelot_codomain(s: QuadraticSplitting, c=1) -> RichelotResult:
    """Codomain y^2 = c * delta^-1 * H1 H2 H3 of the splitting of y^2 = c*G1*G2*G3."""
    G1, G2, G3 = s.G
    F = G1.field
    d = delta(s)
    if not d:
        return RichelotResult(d, None)
    H = (
        G2.derivative() * G3 - G2 * G3.derivative(),
        G3.derivative() * G1 - G3 * G1.derivative(),
        G1.derivative() * G2 - G1 * G2.derivative(),
    )
    prod = H[0] * H[1] * H[2]
    lead = prod.leading()
    roots: Optional[List[Root]] = []
    for h in H:
        if h.degree < 1:
            raise SingularCurveError("unexpected degeneration")
        rs = quadratic_roots(h)
        if len(rs) != h.degree:
            roots = None
            break
        roots.extend(rs)
        if h.degree == 1:
            roots.append(None)
    try:
        curve = HyperellipticCurve(prod.monic(), F(c) * lead / d, 2,
                                   tuple(roots) if roots is not None else None)
    except (SingularCurveError, ValueError) as exc:
        raise SingularCurveError("unexpected degeneration") from exc
    return RichelotResult(d, curve)


def diagnostics(a: Sequence[Fp2Element]) -> SplittingDiagnostics:
    a1, a2, a3, a4, a5 = a
    if len(set(a)) != 5:
        raise SingularCurveError("singular configuration")
    D1 = (a2 - a4) * (a2 - a5) * (a3 - a4) * (a3 - a5)
    D2 = (a1 - a4) * (a1 - a5)
    D3 = (a1 - a2) * (a1 - a3)
    return SplittingDiagnostics(D1, D2, D3)


def diagnostic_splitting(a: Sequence[Fp2Element]) -> QuadraticSplitting:
    """G1 = X - a1 (paired with infinity), G2 = (X-a2)(X-a3), G3 = (X-a4)(X-a5)."""
    a1, a2, a3, a4, a5 = a
    return splitting_from_pairs(a1.field, [(a1, None), (a2, a3), (a4, a5)])
