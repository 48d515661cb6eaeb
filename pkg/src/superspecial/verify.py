"""Executable checks of the structural results on superspecial curves.

Every checker returns a :class:`TheoremReport`.  A failure is a JSON-ready
payload naming its predicate and inputs; :func:`replay` re-evaluates it, so a
reported counterexample can always be reproduced independently of the scan
that found it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import permutations
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from . import kernels
from .census import (
    BRUTE_FORCE_MAX_P,
    CurveCensus,
    algorithm1,
    brute_force_census,
    keys_from_triples,
    square_difference_set,
    superspecial_triples,
    supersingular_legendre_params,
)
from .curves import (
    HyperellipticCurve,
    Kind,
    LegendreCurve,
    classify,
    count_points,
    gluing_parameters,
    hasse_invariant,
    hasse_weil_bounds,
    is_superspecial,
    symmetric_curve,
)
from .ff import Fp2, Fp2Element, field
from .richelot import diagnostics, richelot_codomain, splittings
from .rosenhain import (
    RosenhainTriple,
    five_values,
    format_triple,
    nine_values,
    orbit_120,
    parse_triple,
    to_rosenhain,
)

GENUS3_MAX_P = 13
GENUS4_FULL_MAX_P = 7
GENUS4_DEFAULT_BUDGET = 100_000


@dataclass
class TheoremReport:
    theorem: str
    p: Optional[int]
    checked: int = 0
    failures: List[dict] = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "p": self.p,
            "checked": self.checked,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed * 1000),
        }


# ---------------------------------------------------------------------------
# predicates: each returns None on success or a short reason string

def _elts(F: Fp2, values: Sequence[str]) -> List[Fp2Element]:
    return [F.parse(v) for v in values]


def _expected_kind(p: int) -> Kind:
    return Kind.MAXIMAL if p % 4 == 3 else Kind.MINIMAL


def _extreme_count(p: int, genus: int, kind: Kind) -> int:
    lo, hi = hasse_weil_bounds(p, genus)
    return hi if kind is Kind.MAXIMAL else lo


def pred_nine_squares(p: int, triple: str) -> Optional[str]:
    t = parse_triple(field(p), triple)
    bad = [str(v) for v in nine_values(t) if not v.is_square()]
    return f"non-squares: {bad}" if bad else None


def pred_five_fourth_powers(p: int, triple: str) -> Optional[str]:
    t = parse_triple(field(p), triple)
    bad = [str(v) for v in five_values(t) if not v.is_fourth_power()]
    return f"not fourth powers: {bad}" if bad else None


def pred_main_B(p: int, triple: str) -> Optional[str]:
    t = parse_triple(field(p), triple)
    n = count_points(t.curve())
    want = _extreme_count(p, 2, _expected_kind(p))
    return None if n == want else f"count {n} != {want}"


def pred_lemma32(p: int, arrangement: Sequence[str]) -> Optional[str]:
    a = _elts(field(p), arrangement)
    d = diagnostics(a)
    problems = [f"{name} not a square" for name, x in (("D1", d.D1), ("D2", d.D2), ("D3", d.D3))
                if not x.is_square()]
    for name, x in (("D1D2", d.D1 * d.D2), ("D2D3", d.D2 * d.D3), ("D3D1", d.D3 * d.D1)):
        if not x.is_fourth_power():
            problems.append(f"{name} not a fourth power")
        r = x.sqrt()
        if r is None or not r.is_square():
            problems.append(f"sqrt({name}) not a square")
    return "; ".join(problems) or None


def pred_lemma33(p: int, a: str, b: str) -> Optional[str]:
    F = field(p)
    a_, b_ = F.parse(a), F.parse(b)
    C = symmetric_curve(a_, b_)
    if not is_superspecial(C):
        return None
    cls = classify(C)
    if cls.kind is Kind.NEITHER:
        return f"neither maximal nor minimal (count {cls.count})"
    one_minus_a_sq = (1 - a_).is_square()
    maximal = one_minus_a_sq if p % 4 == 3 else not one_minus_a_sq
    if (cls.kind is Kind.MAXIMAL) != maximal:
        return f"{cls.kind.value} but 1-a square={one_minus_a_sq}"
    if C.roots is None:
        return "a or b not a square"
    # Rosenhain form through (a1, a2, a3) = (1, -1, sqrt a)
    one, sa = F.one, a_.sqrt()
    rest = [-sa, b_.sqrt(), -b_.sqrt()]
    triple, kappa = to_rosenhain([one, -one, sa, *rest], 1)
    if kappa.is_square() != one_minus_a_sq:
        return "kappa square class differs from that of 1-a"
    ros = classify(RosenhainTriple(*triple.values()).curve())
    if ros.kind is not _expected_kind(p):
        return f"Rosenhain form is {ros.kind.value}"
    return None


def pred_genus3(p: int, params: Sequence[str]) -> Optional[str]:
    vals = _elts(field(p), params)
    C = symmetric_curve(*vals)
    if not is_superspecial(C):
        return None
    problems = [f"{v} not a square" for v in vals if not v.is_square()]
    n = count_points(C)
    want = _extreme_count(p, 3, _expected_kind(p))
    if n != want:
        problems.append(f"count {n} != {want}")
    return "; ".join(problems) or None


def pred_genus4(p: int, params: Sequence[str]) -> Optional[str]:
    vals = _elts(field(p), params)
    C = symmetric_curve(*vals)
    if not is_superspecial(C):
        return None
    problems = [f"{v} not a square" for v in vals if not v.is_square()]
    classes = {(1 - v).is_square() for v in vals}
    if len(classes) != 1:
        problems.append("1-a, 1-b, 1-c, 1-d in different square classes")
    one_minus_a_sq = (1 - vals[0]).is_square()
    maximal = one_minus_a_sq if p % 4 == 3 else not one_minus_a_sq
    want = _extreme_count(p, 4, Kind.MAXIMAL if maximal else Kind.MINIMAL)
    n = count_points(C)
    if n != want:
        problems.append(f"count {n} != {want}")
    return "; ".join(problems) or None


def pred_richelot(p: int, triple: str) -> Optional[str]:
    t = parse_triple(field(p), triple)
    C = t.curve()
    kind = classify(C).kind
    ra_order = 120 // len(orbit_120(t))
    problems = []
    for k, s in enumerate(splittings(C)):
        res = richelot_codomain(s, C.c)
        if res.is_product:
            if ra_order % 2:
                problems.append(f"splitting {k}: delta=0 but |RA|={ra_order} is odd")
            continue
        if not is_superspecial(res.curve):
            problems.append(f"splitting {k}: codomain not superspecial")
        elif classify(res.curve).kind is not kind:
            problems.append(f"splitting {k}: codomain not {kind.value}")
    return "; ".join(problems) or None


def pred_genus1(p: int, t: str) -> Optional[str]:
    t_ = field(p).parse(t)
    E = LegendreCurve(t_).as_hyperelliptic()
    by_cm = is_superspecial(E)
    by_hasse = not hasse_invariant(t_)
    trace = p * p + 1 - count_points(E)
    by_count = trace % p == 0
    if by_cm == by_hasse == by_count:
        return None
    return f"cartier-manin={by_cm} hasse={by_hasse} trace={trace}"


def pred_x5(p: int) -> Optional[str]:
    F = field(p)
    C = HyperellipticCurve.from_coefficients(F, [-1, 0, 0, 0, 0, 1])
    ss = is_superspecial(C)
    if ss == (p % 5 == 4):
        return None
    return f"superspecial={ss} for p = {p % 5} mod 5"


PREDICATES: Dict[str, Callable[..., Optional[str]]] = {
    "nine_squares": pred_nine_squares,
    "five_fourth_powers": pred_five_fourth_powers,
    "main_B": pred_main_B,
    "lemma32": pred_lemma32,
    "lemma33": pred_lemma33,
    "genus3": pred_genus3,
    "genus4": pred_genus4,
    "richelot": pred_richelot,
    "genus1": pred_genus1,
    "x5": pred_x5,
}


def replay(payload: dict) -> bool:
    """True when the payload's predicate still fails."""
    args = {k: v for k, v in payload.items() if k not in ("predicate", "reason")}
    return PREDICATES[payload["predicate"]](**args) is not None


def _run(report: TheoremReport, predicate: str, **kwargs) -> None:
    report.checked += 1
    reason = PREDICATES[predicate](**kwargs)
    if reason is not None:
        report.failures.append({"predicate": predicate, **kwargs, "reason": reason})


def _default_census(p: int, method: str = "auto") -> CurveCensus:
    if method == "brute" or (method == "auto" and p <= BRUTE_FORCE_MAX_P):
        return brute_force_census(p)
    return algorithm1(p)


def _timed(fn):
    def wrapper(*args, **kwargs) -> TheoremReport:
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ---------------------------------------------------------------------------
# checkers

@_timed
def check_main_A(p: int, workers: int = 1, extra_triples: Iterable[RosenhainTriple] = ()) -> TheoremReport:
    """Nine squares and five fourth powers on every superspecial Rosenhain triple.

    Up to the brute-force bound the triples come from the unpruned scan of all
    of F_{p^2}; beyond it from the orbits of the Richelot-saturated census.
    """
    F = field(p)
    report = TheoremReport("A", p)
    if p <= BRUTE_FORCE_MAX_P:
        found = superspecial_triples(p, pruned=False, workers=workers)
        triples = [RosenhainTriple(*(F.from_key(k) for k in t)) for t in found]
        covered = set()
        for key in keys_from_triples(F, found):
            covered.update(orbit_120(RosenhainTriple(*key)))
        if covered != {t.values() for t in triples}:
            report.failures.append({"predicate": "orbit_coverage", "p": p,
                                    "reason": "scan is not a union of full Rosenhain orbits"})
    else:
        triples = []
        for key in algorithm1(p).keys():
            triples.extend(orbit_120(RosenhainTriple(*key)).values())
    for t in list(triples) + list(extra_triples):
        s = format_triple(t.values())
        _run(report, "nine_squares", p=p, triple=s)
        _run(report, "five_fourth_powers", p=p, triple=s)
    return report


@_timed
def check_main_B(p: int, census: Optional[CurveCensus] = None, extra_triples: Iterable[RosenhainTriple] = ()) -> TheoremReport:
    census = census or _default_census(p)
    report = TheoremReport("B", p)
    for key in sorted(census.keys(), key=lambda k: tuple(v.key() for v in k)):
        _run(report, "main_B", p=p, triple=format_triple(key))
    for t in extra_triples:
        _run(report, "main_B", p=p, triple=format_triple(t.values()))
    return report


@_timed
def check_p3_nonexistence() -> TheoremReport:
    report = TheoremReport("p3", 3)
    F = field(3)
    S = square_difference_set(3)
    report.checked += 1
    if S != [F(2)]:
        report.failures.append({"predicate": "p3_S", "p": 3, "reason": f"S = {[str(s) for s in S]}"})
    report.checked += 1
    if len(S) >= 3:
        report.failures.append({"predicate": "p3_S", "p": 3, "reason": "S has room for a distinct triple"})
    report.checked += 1
    census = brute_force_census(3, pruned=False)
    if len(census):
        report.failures.append({"predicate": "p3_census", "p": 3,
                                "reason": f"{len(census)} superspecial classes found"})
    return report


def _scan_symmetric(p: int, k: int, blocks, workers: int) -> List[tuple]:
    F = field(p)
    genus = k

    def scan(block: np.ndarray) -> List[tuple]:
        roots = [kernels.split_keys(F, block[:, j]) for j in range(k)]
        # x^2 - 1
        base = [(F.p - 1, 0), (0, 0), (1, 0)]
        f = kernels.batch_from_roots(F, base, roots, power=2)
        ok = kernels.batch_superspecial(F, f, genus)
        return [tuple(int(v) for v in row) for row in block[ok]]

    return kernels.map_chunks(scan, blocks, workers)


def symmetric_scan(p: int, k: int, budget: Optional[int] = None, seed: int = 0, workers: int = 1) -> List[tuple]:
    """Superspecial (x^2-1) prod (x^2-a_i) with k distinct a_i outside {0, 1}.

    Exhaustive over unordered parameter sets, or ``budget`` uniform random sets.
    """
    F = field(p)
    candidates = list(range(2, F.order))
    if budget is None:
        blocks = kernels.combination_chunks(candidates, k)
    else:
        rng = np.random.default_rng(seed)
        cand = np.array(candidates, dtype=np.int64)

        def sampled():
            left = budget
            while left > 0:
                m = min(left, kernels.DEFAULT_CHUNK)
                idx = np.argsort(rng.random((m, len(cand))), axis=1)[:, :k]
                yield np.sort(cand[idx], axis=1)
                left -= m
        blocks = sampled()
    return _scan_symmetric(p, k, blocks, workers)


@_timed
def check_genus3(p: int, workers: int = 1, max_p: int = GENUS3_MAX_P) -> TheoremReport:
    if p > max_p:
        raise ValueError(f"genus-3 scan out of configured range (p={p} > {max_p})")
    F = field(p)
    report = TheoremReport("genus3", p)
    for params in symmetric_scan(p, 3, workers=workers):
        _run(report, "genus3", p=p, params=[str(F.from_key(k)) for k in params])
    return report


@_timed
def check_genus4(p: int, budget: Optional[int] = None, seed: int = 0, workers: int = 1) -> TheoremReport:
    """Full scan for p <= 7 unless a budget is given; random sampling otherwise."""
    if budget is None and p > GENUS4_FULL_MAX_P:
        budget = GENUS4_DEFAULT_BUDGET
    F = field(p)
    report = TheoremReport("genus4", p)
    for params in symmetric_scan(p, 4, budget=budget, seed=seed, workers=workers):
        _run(report, "genus4", p=p, params=[str(F.from_key(k)) for k in params])
    return report


@_timed
def check_lemma_3_2(p: int, census: Optional[CurveCensus] = None, full_orbit: bool = False) -> TheoremReport:
    """D_i D_j fourth powers over every arrangement (a1..a5) of {0, 1, lam, mu, nu}."""
    census = census or _default_census(p)
    F = field(p)
    report = TheoremReport("lemma32", p)
    for key in sorted(census.keys(), key=lambda k: tuple(v.key() for v in k)):
        triples = orbit_120(RosenhainTriple(*key)).keys() if full_orbit else [key]
        for values in triples:
            for arrangement in permutations([F.zero, F.one, *values]):
                _run(report, "lemma32", p=p, arrangement=[str(a) for a in arrangement])
    return report


@_timed
def check_lemma_3_3_and_3_4(p: int) -> TheoremReport:
    """Decomposed curves glued from supersingular Legendre pairs."""
    report = TheoremReport("lemma33", p)
    params = sorted(supersingular_legendre_params(p))
    for t1 in params:
        for t2 in params:
            if t1 == t2:
                continue
            try:
                a, b = gluing_parameters(t1, t2)
            except ValueError:
                continue
            _run(report, "lemma33", p=p, a=str(a), b=str(b))
    return report


@_timed
def check_richelot_closure(p: int, census: Optional[CurveCensus] = None) -> TheoremReport:
    """Codomains stay superspecial with the same class; delta = 0 only when |RA| is even."""
    census = census or _default_census(p)
    report = TheoremReport("richelot", p)
    for key in sorted(census.keys(), key=lambda k: tuple(v.key() for v in k)):
        _run(report, "richelot", p=p, triple=format_triple(key))
    return report


@_timed
def check_genus1(p: int) -> TheoremReport:
    """Cartier-Manin, Hasse invariant and trace mod p agree on every Legendre curve."""
    report = TheoremReport("genus1", p)
    F = field(p)
    for t in F.elements():
        if t != 0 and t != 1:
            _run(report, "genus1", p=p, t=str(t))
    return report


@_timed
def check_x5(primes: Iterable[int]) -> TheoremReport:
    """y^2 = x^5 - 1 is superspecial iff p = 4 mod 5."""
    primes = list(primes)
    report = TheoremReport("x5", None)
    for p in primes:
        _run(report, "x5", p=p)
    return report


CHECKERS = {
    "A": lambda p, cfg: check_main_A(p, workers=cfg.get("workers", 1)),
    "B": lambda p, cfg: check_main_B(p),
    "p3": lambda p, cfg: check_p3_nonexistence(),
    "genus3": lambda p, cfg: check_genus3(p, workers=cfg.get("workers", 1)),
    "genus4": lambda p, cfg: check_genus4(p, budget=cfg.get("genus4_budget"), workers=cfg.get("workers", 1)),
    "lemma32": lambda p, cfg: check_lemma_3_2(p),
    "lemma33": lambda p, cfg: check_lemma_3_3_and_3_4(p),
    "richelot": lambda p, cfg: check_richelot_closure(p),
    "genus1": lambda p, cfg: check_genus1(p),
    "x5": lambda p, cfg: check_x5([p]),
}
