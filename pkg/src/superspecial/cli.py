"""Command line: ``superspecial {enumerate,check,verify}``.

Exit codes: 0 success, 1 verification failure or oracle mismatch, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional, Sequence

from . import census as census_mod
from . import verify as verify_mod
from .curves import HyperellipticCurve, cartier_manin, classify, is_superspecial, with_rational_roots
from .ff import MAX_PRIME, field, is_prime
from .rosenhain import (
    RosenhainTriple,
    all_rosenhain_defined_over,
    curve_key,
    five_fourth_powers,
    format_triple,
    parse_triple,
)

SCHEMA = 1
CSV_COLUMNS = ["p", "key", "lambda", "mu", "nu", "classification", "point_count", "provenance"]
THEOREMS = ["A", "B", "p3", "genus3", "genus4", "lemma32", "lemma33", "richelot", "genus1", "x5"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_primes(text: str) -> List[int]:
    """``"7"`` or ``"5..13"``; single values must be odd primes."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            if lo > hi:
                raise UsageError(f"empty prime range {text!r}")
            primes = [q for q in range(max(lo, 3), hi + 1) if is_prime(q)]
        else:
            q = int(text)
            if q < 3 or not is_prime(q):
                raise UsageError(f"not prime: {q}")
            primes = [q]
    except ValueError as exc:
        raise UsageError(f"bad prime specification {text!r}") from exc
    if not primes:
        raise UsageError(f"no odd primes in {text!r}")
    if primes[-1] >= MAX_PRIME:
        raise UsageError(f"prime out of supported range: {primes[-1]}")
    return primes


def _census_for(p: int, method: str, workers: int):
    """Returns (census, ok)."""
    if method == "brute" or p < 7:
        if method != "brute":
            print(f"p={p}: Richelot seeding needs p >= 7, using brute force")
        return census_mod.brute_force_census(p, workers=workers), True
    alg = census_mod.algorithm1(p)
    if method == "algorithm1":
        return alg, True
    brute = census_mod.brute_force_census(p, workers=workers)
    same = alg.keys() == brute.keys()
    print(f"p={p}: algorithm1={len(alg)} brute={len(brute)} {'agree' if same else 'MISMATCH'}")
    return alg, same


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def census_document(rows: Sequence[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "entries": list(rows)}, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_enumerate(args) -> int:
    primes = parse_primes(args.p)
    rows: List[dict] = []
    status = EXIT_OK
    for p in primes:
        census, ok = _census_for(p, args.method, args.threads)
        if not ok:
            status = EXIT_FAIL
        kinds = {}
        for e in census.sorted_entries():
            kinds[e.classification.kind.value] = kinds.get(e.classification.kind.value, 0) + 1
        breakdown = ", ".join(f"{k}={v}" for k, v in sorted(kinds.items())) or "none"
        print(f"p={p}: {len(census)} superspecial curves ({breakdown})")
        rows.extend(census.rows())
    _write(args.out, census_document(rows, args.format))
    return status


def _bool(x: bool) -> str:
    return "true" if x else "false"


def cmd_check(args) -> int:
    primes = parse_primes(args.p)
    if len(primes) != 1:
        raise UsageError("check takes a single prime")
    p = primes[0]
    F = field(p)
    if (args.triple is None) == (args.poly is None):
        raise UsageError("give exactly one of --triple or --poly")
    if args.triple is not None:
        triple = parse_triple(F, args.triple)
        C = triple.curve() if args.twist is None else HyperellipticCurve.from_roots(triple.roots(), F.parse(args.twist))
    else:
        coeffs = [F.parse(c) for c in args.poly.split(",")]
        c = F.parse(args.twist) if args.twist is not None else 1
        C = with_rational_roots(HyperellipticCurve.from_coefficients(F, coeffs, c))
    cm = cartier_manin(C)
    cls = classify(C)
    print(f"p: {p}")
    print(f"curve: y^2 = {C.c} * ({C.f})")
    print(f"genus: {C.genus}")
    print(f"superspecial: {_bool(is_superspecial(C))}")
    print("cartier_manin: [" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in cm) + "]")
    print(f"point_count: {cls.count}")
    print(f"classification: {cls.kind.value}")
    if C.genus == 2 and C.roots is not None:
        key = curve_key(C)
        rep = RosenhainTriple(*key)
        print(f"nine_squares: {_bool(all_rosenhain_defined_over(rep))}")
        print(f"five_fourth_powers: {_bool(five_fourth_powers(rep))}")
        print(f"canonical_key: {format_triple(key)}")
    else:
        print("nine_squares: n/a")
        print("five_fourth_powers: n/a")
        print("canonical_key: n/a")
    return EXIT_OK


def cmd_verify(args) -> int:
    primes = parse_primes(args.p)
    selected = [t.strip() for t in args.theorems.split(",") if t.strip()]
    unknown = [t for t in selected if t not in THEOREMS]
    if unknown or not selected:
        raise UsageError(f"unknown theorem selector(s): {unknown}; choose from {','.join(THEOREMS)}")
    cfg = {"workers": args.threads, "genus4_budget": args.genus4_budget}
    reports = []
    for name in selected:
        targets = [3] if name == "p3" else primes
        for p in targets:
            try:
                r = verify_mod.CHECKERS[name](p, cfg)
            except ValueError as exc:
                raise UsageError(f"{name} at p={p}: {exc}") from exc
            reports.append(r)
            verdict = "ok" if r.ok else f"FAILED ({len(r.failures)})"
            print(f"{name} p={p}: checked={r.checked} {verdict} [{r.elapsed:.2f}s]")
            for f in r.failures[:5]:
                print(f"  {json.dumps(f)}")
    doc = {"schema": SCHEMA, "reports": [r.to_json() for r in reports]}
    _write(args.out, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superspecial", description="Superspecial genus-2 curves over F_{p^2}: census, inspection and checks.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="census of superspecial genus-2 curves")
    e.add_argument("--p", required=True, help="prime or range A..B")
    e.add_argument("--method", choices=["algorithm1", "brute", "both"], default="algorithm1")
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.add_argument("--out", help="write the census here")
    e.add_argument("--threads", type=int, default=1)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="inspect one curve")
    c.add_argument("--p", required=True)
    c.add_argument("--triple", help="Rosenhain triple '(l; m; n)'")
    c.add_argument("--poly", help="comma-separated coefficients of f, constant term first")
    c.add_argument("--twist", help="twist constant c in y^2 = c f(x)")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="run theorem checkers")
    v.add_argument("--p", required=True, help="prime or range A..B")
    v.add_argument("--theorems", default="A,B", help=",".join(THEOREMS))
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--genus4-budget", type=int, default=None, dest="genus4_budget")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:  # includes SingularCurveError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
