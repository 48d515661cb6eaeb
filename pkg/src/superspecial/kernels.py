"""Vectorized F_{p^2} kernels for exhaustive scans.

Field elements are handled as pairs of int64 arrays ``(c0, c1)``.  A batch of
polynomials is a pair of 2-D arrays of shape ``(N, deg + 1)``, ascending
degree.  Intermediate sums stay far below 2^63 for every supported prime
because each step reduces mod p before the next accumulation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import combinations, islice
from typing import Callable, Iterator, List, Sequence, Tuple

import numpy as np

from .ff import Fp2

Pair = Tuple[np.ndarray, np.ndarray]

DEFAULT_CHUNK = 1 << 16


def split_keys(F: Fp2, keys) -> Pair:
    keys = np.asarray(keys, dtype=np.int64)
    return keys % F.p, keys // F.p


def join_keys(F: Fp2, x: Pair) -> np.ndarray:
    return x[0] + x[1] * F.p


def vmul(F: Fp2, a: Pair, b: Pair) -> Pair:
    p, n = F.p, F.n
    return ((a[0] * b[0] + n * (a[1] * b[1] % p)) % p, (a[0] * b[1] + a[1] * b[0]) % p)


def vadd(F: Fp2, a: Pair, b: Pair) -> Pair:
    return ((a[0] + b[0]) % F.p, (a[1] + b[1]) % F.p)


@lru_cache(maxsize=None)
def square_table(p: int) -> np.ndarray:
    """Boolean table over keys: True where the element is a nonzero square."""
    F = Fp2(p)
    k = np.arange(F.order, dtype=np.int64)
    x = split_keys(F, k)
    sq = join_keys(F, vmul(F, x, x))
    table = np.zeros(F.order, dtype=bool)
    table[sq] = True
    table[0] = False
    return table


def chi_table(p: int) -> np.ndarray:
    """Quadratic character of F_{p^2} indexed by key (chi(0) = 0)."""
    sq = square_table(p)
    chi = np.where(sq, 1, -1).astype(np.int64)
    chi[0] = 0
    return chi


def batch_times_linear_in(F: Fp2, f: Pair, power: int, r: Pair) -> Pair:
    """Multiply each row polynomial by (x^power - r_row)."""
    N, L = f[0].shape
    out0 = np.zeros((N, L + power), dtype=np.int64)
    out1 = np.zeros((N, L + power), dtype=np.int64)
    out0[:, power:] += f[0]
    out1[:, power:] += f[1]
    r0 = r[0][:, None]
    r1 = r[1][:, None]
    t0, t1 = vmul(F, (f[0], f[1]), (r0, r1))
    out0[:, :L] -= t0
    out1[:, :L] -= t1
    return out0 % F.p, out1 % F.p


def batch_from_roots(F: Fp2, base: Sequence[Tuple[int, int]], roots: Sequence[Pair], power: int = 1) -> Pair:
    """Rows ``base(x) * prod_k (x^power - roots[k][row])``.

    ``base`` is a fixed polynomial given as ascending (c0, c1) coefficients.
    """
    N = len(roots[0][0]) if roots else 1
    f0 = np.tile(np.array([c[0] for c in base], dtype=np.int64), (N, 1))
    f1 = np.tile(np.array([c[1] for c in base], dtype=np.int64), (N, 1))
    f = (f0, f1)
    for r in roots:
        f = batch_times_linear_in(F, f, power, r)
    return f


def batch_power_truncated(F: Fp2, f: Pair, e: int, max_degree: int) -> Pair:
    """Rows f^e, coefficients above ``max_degree`` discarded."""
    p, n = F.p, F.n
    N, L = f[0].shape
    size = max_degree + 1
    acc0 = np.zeros((N, size), dtype=np.int64)
    acc1 = np.zeros((N, size), dtype=np.int64)
    acc0[:, 0] = 1
    for _ in range(e):
        new0 = np.zeros_like(acc0)
        new1 = np.zeros_like(acc1)
        for j in range(min(L, size)):
            b0 = f[0][:, j : j + 1]
            b1 = f[1][:, j : j + 1]
            if not (b0.any() or b1.any()):
                continue
            a0 = acc0[:, : size - j]
            a1 = acc1[:, : size - j]
            new0[:, j:] += (a0 * b0 + n * (a1 * b1 % p)) % p
            new1[:, j:] += (a0 * b1 + a1 * b0) % p
        acc0 = new0 % p
        acc1 = new1 % p
    return acc0, acc1


def batch_cartier_manin(F: Fp2, f: Pair, genus: int) -> np.ndarray:
    """Cartier-Manin matrices of y^2 = f(x) for each row.

    Returns an array of shape (N, g, g, 2) holding (c0, c1) of the entry
    coeff_{i p - j}(f^((p-1)/2)) at [i-1, j-1].
    """
    p = F.p
    g = genus
    pw = batch_power_truncated(F, f, (p - 1) // 2, g * p - 1)
    N = f[0].shape[0]
    out = np.zeros((N, g, g, 2), dtype=np.int64)
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            out[:, i - 1, j - 1, 0] = pw[0][:, i * p - j]
            out[:, i - 1, j - 1, 1] = pw[1][:, i * p - j]
    return out


def batch_superspecial(F: Fp2, f: Pair, genus: int) -> np.ndarray:
    cm = batch_cartier_manin(F, f, genus)
    return ~cm.reshape(cm.shape[0], -1).any(axis=1)


def evaluate_everywhere(F: Fp2, coeffs: Sequence[Tuple[int, int]]) -> np.ndarray:
    """Keys of f(x) for every x in F_{p^2} (x in key order)."""
    x = split_keys(F, np.arange(F.order, dtype=np.int64))
    acc = (np.zeros(F.order, dtype=np.int64), np.zeros(F.order, dtype=np.int64))
    for c0, c1 in reversed(list(coeffs)):
        acc = vmul(F, acc, x)
        acc = ((acc[0] + c0) % F.p, (acc[1] + c1) % F.p)
    return join_keys(F, acc)


def combination_chunks(items: Sequence[int], k: int, chunk: int = DEFAULT_CHUNK) -> Iterator[np.ndarray]:
    """k-subsets of ``items`` (in lexicographic index order) as (m, k) arrays."""
    it = combinations(items, k)
    while True:
        block = list(islice(it, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def map_chunks(fn: Callable[[np.ndarray], List], chunks: Iterator[np.ndarray], workers: int = 1) -> List:
    """Apply ``fn`` to each chunk and concatenate results in chunk order."""
    results: List = []
    if workers <= 1:
        for c in chunks:
            results.extend(fn(c))
        return results
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, chunks):
            results.extend(part)
    return results
