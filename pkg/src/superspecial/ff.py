"""Arithmetic in F_p and F_{p^2}.

F_{p^2} is realized as F_p[u]/(u^2 - n) where n is the smallest positive
quadratic non-residue mod p.  Elements are immutable pairs (c0, c1) standing
for c0 + c1*u.  The integer ``c0 + c1*p`` is used as a total order key on the
field; it also doubles as a dense index in the numpy kernels.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterator, Optional, Union

MAX_PRIME = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


class Fp2:
    """The field F_{p^2} for an odd prime ``p``.

    Use :func:`field` to get a cached instance; elements of different
    instances with equal ``p`` still compare equal.
    """

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p >= MAX_PRIME or not is_prime(p):
            raise ValueError(f"not prime: {p!r} (need an odd prime 3 <= p < 2^20)")
        self.p = p
        self.n = next(a for a in range(2, p) if legendre(a, p) == -1)
        self.order = p * p
        self._nonsquare: Optional[Fp2Element] = None
        self._ts: Optional[tuple] = None

    def __repr__(self) -> str:
        return f"Fp2({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Fp2) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp2", self.p))

    def __call__(self, c0: Union[int, "Fp2Element"] = 0, c1: int = 0) -> "Fp2Element":
        if isinstance(c0, Fp2Element):
            if c0.field.p != self.p:
                raise ValueError("element belongs to a different field")
            return c0
        return Fp2Element(self, c0 % self.p, c1 % self.p)

    @property
    def zero(self) -> "Fp2Element":
        return Fp2Element(self, 0, 0)

    @property
    def one(self) -> "Fp2Element":
        return Fp2Element(self, 1, 0)

    @property
    def u(self) -> "Fp2Element":
        return Fp2Element(self, 0, 1)

    def from_key(self, k: int) -> "Fp2Element":
        if not 0 <= k < self.order:
            raise ValueError(f"key {k} out of range for F_{self.p}^2")
        return Fp2Element(self, k % self.p, k // self.p)

    def elements(self) -> Iterator["Fp2Element"]:
        """All p^2 elements in increasing key order."""
        for k in range(self.order):
            yield self.from_key(k)

    def prime_field(self) -> Iterator["Fp2Element"]:
        for a in range(self.p):
            yield Fp2Element(self, a, 0)

    @property
    def nonsquare(self) -> "Fp2Element":
        """The non-square of F_{p^2} with the smallest key."""
        if self._nonsquare is None:
            self._nonsquare = next(x for x in self.elements() if x and not x.is_square())
        return self._nonsquare

    def parse(self, text: str) -> "Fp2Element":
        """Parse ``"c0"``, ``"c0+c1*u"``, ``"c1*u"`` or ``"u"`` (signs allowed)."""
        s = re.sub(r"\s*([-+*])\s*", r"\1", text.strip())
        c0 = c1 = 0
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or (pos and not m.group(1)):
                break
            k = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                k = -k
            if m.group(3) or m.group(4):
                c1 += k
            else:
                c0 += k
            pos = m.end()
        if not s or pos != len(s):
            raise ValueError(f"cannot parse field element {text!r}")
        return self(c0, c1)

    def _tonelli_shanks_data(self) -> tuple:
        if self._ts is None:
            q, s = self.order - 1, 0
            while q % 2 == 0:
                q //= 2
                s += 1
            self._ts = (q, s, self.nonsquare ** q)
        return self._ts


_TERM = re.compile(r"([+-]?)(?:(\d+)(\*u)?|(u))")


@lru_cache(maxsize=None)
def field(p: int) -> Fp2:
    return Fp2(p)


class Fp2Element:
    __slots__ = ("field", "c0", "c1")

    def __init__(self, field: Fp2, c0: int, c1: int):
        self.field = field
        self.c0 = c0
        self.c1 = c1

    def _coerce(self, other) -> "Fp2Element":
        if isinstance(other, Fp2Element):
            if other.field.p != self.field.p:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, int):
            p = self.field.p
            return Fp2Element(self.field, other % p, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return Fp2Element(self.field, (self.c0 + o.c0) % p, (self.c1 + o.c1) % p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return Fp2Element(self.field, (self.c0 - o.c0) % p, (self.c1 - o.c1) % p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> "Fp2Element":
        p = self.field.p
        return Fp2Element(self.field, -self.c0 % p, -self.c1 % p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        p = F.p
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        return Fp2Element(F, (a0 * b0 + F.n * a1 * b1) % p, (a0 * b1 + a1 * b0) % p)

    __rmul__ = __mul__

    def norm(self) -> int:
        p = self.field.p
        return (self.c0 * self.c0 - self.field.n * self.c1 * self.c1) % p

    def inverse(self) -> "Fp2Element":
        N = self.norm()
        if N == 0:
            raise ZeroDivisionError("division by zero")
        p = self.field.p
        ni = pow(N, p - 2, p)
        return Fp2Element(self.field, self.c0 * ni % p, -self.c1 * ni % p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int) -> "Fp2Element":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "Fp2Element":
        # u^p = n^((p-1)/2) u = -u
        return Fp2Element(self.field, self.c0, -self.c1 % self.field.p)

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp2Element):
            return self.c0 == other.c0 and self.c1 == other.c1 and self.field.p == other.field.p
        if isinstance(other, int):
            return self.c1 == 0 and self.c0 == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.c0, self.c1, self.field.p))

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1)

    def key(self) -> int:
        return self.c0 + self.c1 * self.field.p

    def __lt__(self, other: "Fp2Element") -> bool:
        return self.key() < other.key()

    def __le__(self, other: "Fp2Element") -> bool:
        return self.key() <= other.key()

    def __gt__(self, other: "Fp2Element") -> bool:
        return self.key() > other.key()

    def __ge__(self, other: "Fp2Element") -> bool:
        return self.key() >= other.key()

    def in_prime_field(self) -> bool:
        return self.c1 == 0

    def is_square(self) -> bool:
        # x^((p^2-1)/2) = N(x)^((p-1)/2), so the norm's Legendre symbol decides.
        if not self:
            return True
        return legendre(self.norm(), self.field.p) == 1

    def is_fourth_power(self) -> bool:
        if not self:
            return True
        return self ** ((self.field.order - 1) // 4) == 1

    def sqrt(self) -> Optional["Fp2Element"]:
        """Canonical square root (smaller key of +-r), or None for non-squares."""
        if not self:
            return self
        if not self.is_square():
            return None
        q, s, z = self.field._tonelli_shanks_data()
        m, c = s, z
        t = self ** q
        r = self ** ((q + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2
                i += 1
            b = c
            for _ in range(m - i - 1):
                b = b * b
            m, c = i, b * b
            t, r = t * c, r * b
        neg = -r
        return neg if neg.key() < r.key() else r

    def __str__(self) -> str:
        if self.c1 == 0:
            return str(self.c0)
        return f"{self.c0}+{self.c1}*u"

    def __repr__(self) -> str:
        return f"Fp2Element({self}, p={self.field.p})"
