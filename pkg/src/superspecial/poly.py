"""Dense univariate polynomials over F_{p^2}."""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from .ff import Fp2, Fp2Element

Scalar = Union[int, Fp2Element]

_INT64_BUDGET = (1 << 62)


def _convolve(a: List[int], b: List[int], p: int) -> List[int]:
    """Integer convolution mod p; numpy when int64 cannot overflow."""
    if not a or not b:
        return []
    if (p - 1) ** 2 * min(len(a), len(b)) < _INT64_BUDGET:
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return (out % p).tolist()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [c % p for c in out]


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of x^k.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Fp2, coeffs: Iterable[Scalar] = ()):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs: Tuple[Fp2Element, ...] = tuple(cs)

    @classmethod
    def x(cls, field: Fp2) -> "Polynomial":
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field: Fp2, c: Scalar) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def from_roots(cls, field: Fp2, roots: Iterable[Scalar]) -> "Polynomial":
        f = cls(field, [1])
        for r in roots:
            f = f * cls(field, [-field(r), 1])
        return f

    @classmethod
    def _from_parts(cls, field: Fp2, c0: List[int], c1: List[int]) -> "Polynomial":
        n = max(len(c0), len(c1))
        c0 = c0 + [0] * (n - len(c0))
        c1 = c1 + [0] * (n - len(c1))
        obj = cls.__new__(cls)
        cs = [Fp2Element(field, a, b) for a, b in zip(c0, c1)]
        while cs and not cs[-1]:
            cs.pop()
        obj.field = field
        obj.coeffs = tuple(cs)
        return obj

    def _parts(self) -> Tuple[List[int], List[int]]:
        return [c.c0 for c in self.coeffs], [c.c1 for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fp2Element:
        if k < 0:
            raise ValueError("negative coefficient index")
        return self.coeffs[k] if k < len(self.coeffs) else self.field.zero

    def leading(self) -> Fp2Element:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def _lift(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fp2Element)):
            return Polynomial(self.field, [other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self.field, [self.coefficient(k) + o.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Polynomial(self.field)
        p, n = self.field.p, self.field.n
        a0, a1 = self._parts()
        b0, b1 = o._parts()
        # (a0 + a1 u)(b0 + b1 u) = a0 b0 + n a1 b1 + (a0 b1 + a1 b0) u
        r00 = _convolve(a0, b0, p)
        r11 = _convolve(a1, b1, p) if any(a1) and any(b1) else []
        r01 = _convolve(a0, b1, p) if any(b1) else []
        r10 = _convolve(a1, b0, p) if any(a1) else []
        size = len(r00)
        c0 = [(r00[k] + n * (r11[k] if r11 else 0)) % p for k in range(size)]
        c1 = [((r01[k] if r01 else 0) + (r10[k] if r10 else 0)) % p for k in range(size)]
        return Polynomial._from_parts(self.field, c0, c1)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.field.p == o.field.p and self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __call__(self, x: Scalar) -> Fp2Element:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field, [c * k for k, c in enumerate(self.coeffs)][1:])

    def scale(self, c: Scalar) -> "Polynomial":
        return self * c

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self * self.leading().inverse()

    def divmod(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(self.field), self
        lead_inv = other.leading().inverse()
        quot = [self.field.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] * lead_inv
            quot[k] = q
            if q:
                for j, g in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - q * g
        return Polynomial(self.field, quot), Polynomial(self.field, rem)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        return self.gcd(self.derivative()).degree == 0

    def __repr__(self) -> str:
        return f"Polynomial({self}, p={self.field.p})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                cs = str(c) if c.c1 == 0 else f"({c})"
                terms.append(cs + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


def quadratic_roots(g: Polynomial) -> List[Fp2Element]:
    """Roots in F_{p^2} of a polynomial of degree 1 or 2, with multiplicity.

    A quadratic that does not split over F_{p^2} gives an empty list.
    """
    if g.is_zero() or g.degree > 2:
        raise ValueError("quadratic_roots needs a nonzero polynomial of degree <= 2")
    if g.degree == 0:
        return []
    if g.degree == 1:
        return [-g.coeffs[0] / g.coeffs[1]]
    c, b, a = g.coeffs
    disc = b * b - 4 * a * c
    r = disc.sqrt()
    if r is None:
        return []
    two_a = 2 * a
    return sorted([(-b + r) / two_a, (-b - r) / two_a])
