"""Rosenhain forms y^2 = x(x-1)(x-lam)(x-mu)(x-nu) and canonical keys.

Sending three Weierstrass points (a1, a2, a3) to (0, 1, inf) turns
y^2 = c * prod(x - a_i) into kappa * y^2 = x(x-1)(x-lam)(x-mu)(x-nu) with

    lam = (a4-a1)(a2-a3) / ((a4-a3)(a2-a1))   (mu, nu likewise with a5, a6)
    kappa = c (a1-a2)(a3-a4)(a3-a5)(a3-a6)

The map is defined over the base field iff kappa is a square there.  Factors
involving the root at infinity are dropped, which is the projective limit for
the cross-ratios and preserves the square class of kappa.

The canonical key of a curve is the smallest sorted triple over all 120
choices of (a1, a2, a3); two curves are isomorphic over the algebraic closure
iff their keys agree.  Keys are our presentation convention: the reported
triple is this minimum, not any preferred model.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .curves import HyperellipticCurve, Root, SingularCurveError
from .ff import Fp2, Fp2Element

CanonicalKey = Tuple[Fp2Element, Fp2Element, Fp2Element]

ORDERINGS: Tuple[Tuple[int, int, int], ...] = tuple(permutations(range(6), 3))


@dataclass(frozen=True)
class RosenhainTriple:
    lam: Fp2Element
    mu: Fp2Element
    nu: Fp2Element
    twisted: bool = False  # True when kappa is a non-square

    def __post_init__(self):
        vals = [self.lam, self.mu, self.nu]
        F = self.lam.field
        if len({F.zero, F.one, *vals}) != 5:
            raise SingularCurveError("singular configuration")

    @property
    def field(self) -> Fp2:
        return self.lam.field

    def values(self) -> CanonicalKey:
        return (self.lam, self.mu, self.nu)

    def sorted_values(self) -> CanonicalKey:
        return tuple(sorted(self.values()))  # type: ignore[return-value]

    def roots(self) -> Tuple[Root, ...]:
        F = self.field
        return (F.zero, F.one, None, self.lam, self.mu, self.nu)

    def twist_constant(self) -> Fp2Element:
        return self.field.nonsquare if self.twisted else self.field.one

    def curve(self) -> HyperellipticCurve:
        """y^2 = c x(x-1)(x-lam)(x-mu)(x-nu), c = 1 or the fixed non-square."""
        return HyperellipticCurve.from_roots(self.roots(), self.twist_constant(), genus=2)

    def __str__(self) -> str:
        return format_triple(self.values())


def format_triple(values: Sequence[Fp2Element]) -> str:
    return "(" + "; ".join(str(v) for v in values) + ")"


def parse_triple(F: Fp2, text: str) -> RosenhainTriple:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"triple must look like '(l; m; n)': {text!r}")
    parts = [q for q in s[1:-1].split(";")]
    if len(parts) != 3:
        raise ValueError(f"triple needs exactly three entries: {text!r}")
    return RosenhainTriple(*(F.parse(q) for q in parts))


def _diff(a: Root, b: Root) -> Optional[Fp2Element]:
    if a is None or b is None:
        return None
    return a - b


def _prod(F: Fp2, factors) -> Fp2Element:
    acc = F.one
    for x in factors:
        if x is not None:
            acc = acc * x
    return acc


def to_rosenhain(roots: Sequence[Root], c, ordering: Sequence[int] = (0, 1, 2),
                 field: Optional[Fp2] = None) -> Tuple[RosenhainTriple, Fp2Element]:
    """Rosenhain triple and kappa for the choice (a1, a2, a3) = roots[ordering].

    The remaining roots keep their relative order as (a4, a5, a6).
    """
    if len(roots) != 6:
        raise ValueError("a genus-2 curve has exactly six Weierstrass points")
    finite = [r for r in roots if r is not None]
    F = field or finite[0].field
    if len(finite) < 5 or len(set(finite)) != len(finite):
        raise SingularCurveError("singular configuration")
    i1, i2, i3 = ordering
    if len({i1, i2, i3}) != 3:
        raise ValueError("ordering must pick three distinct roots")
    a1, a2, a3 = roots[i1], roots[i2], roots[i3]
    rest = [roots[k] for k in range(6) if k not in (i1, i2, i3)]
    num_common = _diff(a2, a3)
    den_common = _diff(a2, a1)

    def cross(ak: Root) -> Fp2Element:
        num = _prod(F, (_diff(ak, a1), num_common))
        den = _prod(F, (_diff(ak, a3), den_common))
        return num / den

    lam, mu, nu = (cross(ak) for ak in rest)
    kappa = _prod(F, (F(c), _diff(a1, a2), *(_diff(a3, ak) for ak in rest)))
    return RosenhainTriple(lam, mu, nu, twisted=not kappa.is_square()), kappa


def rosenhain_forms(t: RosenhainTriple) -> Iterator[Tuple[Tuple[int, int, int], RosenhainTriple, Fp2Element]]:
    """All 120 (ordering, triple, kappa) for the curve of ``t``."""
    roots = t.roots()
    c = t.twist_constant()
    for ordering in ORDERINGS:
        triple, kappa = to_rosenhain(roots, c, ordering, t.field)
        yield ordering, triple, kappa


def orbit_120(t: RosenhainTriple) -> Dict[CanonicalKey, RosenhainTriple]:
    """Distinct Rosenhain forms of ``t``'s curve, keyed by sorted value triple.

    Its size is 120 / |RA(C)|.  Each value carries the twist of the first
    ordering (in lexicographic order) that produced it.
    """
    out: Dict[CanonicalKey, RosenhainTriple] = {}
    for _, triple, _ in rosenhain_forms(t):
        key = triple.sorted_values()
        if key not in out:
            out[key] = RosenhainTriple(*key, twisted=triple.twisted)
    return out


def canonical_key(t: RosenhainTriple) -> CanonicalKey:
    return min(orbit_120(t), key=lambda k: tuple(v.key() for v in k))


def curve_key(C: HyperellipticCurve) -> CanonicalKey:
    """Canonical key of a genus-2 curve with all Weierstrass points known."""
    if C.genus != 2:
        raise ValueError("canonical keys are defined for genus 2 only")
    if C.roots is None:
        raise ValueError("roots not rational")
    roots = list(C.roots)
    if len(roots) == 5:
        roots.append(None)
    triple, _ = to_rosenhain(roots, C.c, (0, 1, 2), C.field)
    return canonical_key(triple)


def nine_values(t: RosenhainTriple) -> List[Fp2Element]:
    l, m, n = t.values()
    return [l, m, n, 1 - l, 1 - m, 1 - n, l - m, m - n, n - l]


def five_values(t: RosenhainTriple) -> List[Fp2Element]:
    l, m, n = t.values()
    return [
        l * m * n,
        (1 - l) * (1 - m) * (1 - n),
        l * (l - 1) * (l - m) * (l - n),
        m * (m - 1) * (m - l) * (m - n),
        n * (n - 1) * (n - l) * (n - m),
    ]


def all_rosenhain_defined_over(t: RosenhainTriple) -> bool:
    """All nine pairwise differences of {0, 1, lam, mu, nu} are squares."""
    return all(v.is_square() for v in nine_values(t))


def five_fourth_powers(t: RosenhainTriple) -> bool:
    return all(v.is_fourth_power() for v in five_values(t))


def key_to_str(key: CanonicalKey) -> str:
    return format_triple(key)
