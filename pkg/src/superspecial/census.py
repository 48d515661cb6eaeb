"""Censuses of superspecial genus-2 curves over F_{p^2}.

Two independent routes produce the same set of canonical keys:

* ``seed_census`` + ``saturate``: glue pairs of supersingular Legendre curves
  into decomposed curves y^2 = (x^2-1)(x^2-a)(x^2-b), then close the list
  under Richelot isogenies breadth first.
* ``brute_force_census``: scan every Rosenhain triple with the batched
  Cartier-Manin kernel.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterable, List, Set, Tuple

import numpy as np

from . import kernels
from .curves import (
    Classification,
    classify,
    gluing_parameters,
    is_superspecial,
    is_supersingular_legendre,
    symmetric_curve,
)
from .ff import Fp2, field
from .richelot import richelot_codomain, splittings
from .rosenhain import CanonicalKey, RosenhainTriple, curve_key, format_triple, orbit_120

log = logging.getLogger(__name__)

BRUTE_FORCE_MAX_P = 13


@dataclass
class CensusEntry:
    key: CanonicalKey
    classification: Classification
    provenance: str

    @property
    def triple(self) -> RosenhainTriple:
        return RosenhainTriple(*self.key)


@dataclass
class CurveCensus:
    p: int
    entries: Dict[CanonicalKey, CensusEntry] = dc_field(default_factory=dict)
    order: List[CanonicalKey] = dc_field(default_factory=list)  # insertion order, drives BFS
    product_neighbors: Dict[CanonicalKey, int] = dc_field(default_factory=dict)
    skipped_seeds: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key) -> bool:
        return key in self.entries

    def keys(self) -> Set[CanonicalKey]:
        return set(self.entries)

    def insert(self, key: CanonicalKey, provenance: str) -> bool:
        if key in self.entries:
            return False
        triple = RosenhainTriple(*key)
        self.entries[key] = CensusEntry(key, classify(triple.curve()), provenance)
        self.order.append(key)
        return True

    def sorted_entries(self) -> List[CensusEntry]:
        return [self.entries[k] for k in sorted(self.entries, key=_key_order)]

    def rows(self) -> List[dict]:
        rows = []
        for e in self.sorted_entries():
            lam, mu, nu = e.key
            rows.append({
                "p": self.p,
                "key": format_triple(e.key),
                "lambda": str(lam),
                "mu": str(mu),
                "nu": str(nu),
                "classification": e.classification.kind.value,
                "point_count": e.classification.count,
                "provenance": e.provenance,
            })
        return rows


def _key_order(key: CanonicalKey) -> Tuple[int, ...]:
    return tuple(v.key() for v in key)


def supersingular_legendre_params(p: int) -> Set:
    F = field(p)
    return {t for t in F.elements() if t != 0 and t != 1 and is_supersingular_legendre(t)}


def seed_census(p: int) -> CurveCensus:
    """Decomposed superspecial curves glued from supersingular Legendre pairs."""
    if p < 7:
        raise ValueError("Richelot seeding needs p >= 7; use brute_force_census for p = 3, 5")
    params = sorted(supersingular_legendre_params(p))
    census = CurveCensus(p)
    found: Dict[CanonicalKey, None] = {}
    for t1 in params:
        for t2 in params:
            if t1 == t2:
                census.skipped_seeds += 1
                continue
            try:
                a, b = gluing_parameters(t1, t2)
            except ValueError:
                census.skipped_seeds += 1
                continue
            C = symmetric_curve(a, b)
            if not is_superspecial(C):
                raise RuntimeError(f"glued curve from t=({t1}, {t2}) is not superspecial")
            found.setdefault(curve_key(C))
    for key in sorted(found, key=_key_order):
        census.insert(key, "seed")
    log.info("p=%d: %d seeds from %d Legendre parameters (%d pairs skipped)",
             p, len(census), len(params), census.skipped_seeds)
    return census


def richelot_neighbors(triple: RosenhainTriple) -> Tuple[List[CanonicalKey], int]:
    """Canonical keys of the genus-2 Richelot neighbours, and the number of
    splittings with delta = 0 (product codomains)."""
    C = triple.curve()
    keys: List[CanonicalKey] = []
    products = 0
    for s in splittings(C):
        res = richelot_codomain(s, C.c)
        if res.is_product:
            products += 1
        else:
            keys.append(curve_key(res.curve))
    return keys, products


def saturate(census: CurveCensus) -> CurveCensus:
    """Close the census under Richelot isogenies (in place; also returned)."""
    i = 0
    while i < len(census.order):
        key = census.order[i]
        neighbors, products = richelot_neighbors(census.entries[key].triple)
        census.product_neighbors[key] = products
        for nk in neighbors:
            census.insert(nk, f"richelot:{i}")
        i += 1
    return census


def algorithm1(p: int) -> CurveCensus:
    return saturate(seed_census(p))


def square_difference_set(p: int) -> List:
    """S = {s != 0, 1 : s and 1 - s are both squares in F_{p^2}}."""
    F = field(p)
    return [s for s in F.elements() if s != 0 and s != 1 and s.is_square() and (1 - s).is_square()]


def _rosenhain_batch(F: Fp2, triples: np.ndarray) -> kernels.Pair:
    roots = [kernels.split_keys(F, triples[:, k]) for k in range(3)]
    # x(x - 1) = x^2 - x
    base = [(0, 0), (F.p - 1, 0), (1, 0)]
    return kernels.batch_from_roots(F, base, roots)


def superspecial_triples(p: int, pruned: bool = True, workers: int = 1) -> List[Tuple[int, int, int]]:
    """All sorted key triples (lam < mu < nu) whose Rosenhain curve is superspecial."""
    F = field(p)
    if pruned:
        candidates = [s.key() for s in square_difference_set(p)]
    else:
        candidates = list(range(2, F.order))

    def scan(block: np.ndarray) -> List[Tuple[int, int, int]]:
        ok = kernels.batch_superspecial(F, _rosenhain_batch(F, block), 2)
        return [tuple(int(v) for v in row) for row in block[ok]]

    return kernels.map_chunks(scan, kernels.combination_chunks(candidates, 3), workers)


def keys_from_triples(F: Fp2, triples: Iterable[Tuple[int, int, int]]) -> List[CanonicalKey]:
    """Group triples into isomorphism classes; one canonical key per class."""
    covered: Set[Tuple[int, int, int]] = set()
    keys: List[CanonicalKey] = []
    for t in sorted(triples):
        if t in covered:
            continue
        orbit = orbit_120(RosenhainTriple(*(F.from_key(k) for k in t)))
        covered.update(_key_order(k) for k in orbit)
        keys.append(min(orbit, key=_key_order))
    return keys


def brute_force_census(p: int, pruned: bool = True, workers: int = 1,
                       max_p: int = BRUTE_FORCE_MAX_P) -> CurveCensus:
    if p > max_p:
        raise ValueError(f"brute force out of configured range (p={p} > {max_p})")
    F = field(p)
    census = CurveCensus(p)
    for key in sorted(keys_from_triples(F, superspecial_triples(p, pruned, workers)), key=_key_order):
        census.insert(key, "brute")
    return census
