import random
from itertools import permutations

import pytest

from superspecial.census import algorithm1, brute_force_census, richelot_neighbors
from superspecial.curves import HyperellipticCurve, count_points, is_superspecial, symmetric_curve
from superspecial.ff import field
from superspecial.poly import Polynomial
from superspecial.richelot import (
    PAIRINGS,
    delta,
    diagnostic_splitting,
    diagnostics,
    richelot_codomain,
    six_roots,
    splittings,
)
from superspecial.rosenhain import RosenhainTriple


def leibniz_det(rows):
    total = rows[0][0].field.zero
    for perm in permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        term = rows[0][perm[0]] * rows[1][perm[1]] * rows[2][perm[2]]
        total = total + term if sign > 0 else total - term
    return total


def coeff_rows(s):
    return [[g.coefficient(2), g.coefficient(1), g.coefficient(0)] for g in s.G]


def test_fifteen_pairings():
    assert len(PAIRINGS) == 15
    assert len({frozenset(frozenset(pr) for pr in pg) for pg in PAIRINGS}) == 15


def test_splitting_counts_sextic_and_quintic():
    F = field(7)
    sextic = HyperellipticCurve.from_roots([F(k) for k in range(6)])
    assert len(splittings(sextic)) == 15
    quintic = HyperellipticCurve.from_roots([F(k) for k in range(5)])
    ss = splittings(quintic)
    assert len(ss) == 15
    # every splitting has exactly one linear factor, the pair holding infinity
    assert all(sorted(g.degree for g in s.G) == [1, 2, 2] for s in ss)
    partners = [next(a if b is None else b for a, b in s.pairs if None in (a, b)) for s in ss]
    assert sorted(set(partners)) == [F(k) for k in range(5)]
    assert all(partners.count(r) == 3 for r in set(partners))
    for s in ss:
        prod = s.G[0] * s.G[1] * s.G[2]
        assert prod == quintic.f


def test_roots_required():
    F = field(7)
    C = HyperellipticCurve.from_coefficients(F, [-1, 0, 0, 0, 0, 1])
    with pytest.raises(ValueError, match="roots not rational"):
        splittings(C)


def test_delta_example_p7():
    F = field(7)
    a = [F(k) for k in range(5)]
    s = diagnostic_splitting(a)
    X = Polynomial.x(F)
    assert s.G == (X, (X - 1) * (X - 2), (X - 3) * (X - 4))
    assert delta(s) == 4
    D = diagnostics(a)
    assert (D.D1, D.D2, D.D3) == (F(5), F(5), F(2))
    assert delta(s) == -(D.D2 - D.D3)


def test_delta_identity_with_diagnostics_random():
    rng = random.Random(2)
    for p in (7, 11, 13):
        F = field(p)
        for _ in range(20):
            a = [F.from_key(k) for k in rng.sample(range(F.order), 5)]
            D = diagnostics(a)
            assert delta(diagnostic_splitting(a)) == -(D.D2 - D.D3)


def test_delta_two_ways_on_s4_curve():
    F = field(11)
    i = F(-1).sqrt()
    C = RosenhainTriple(F(-1), i, -i).curve()
    for s in splittings(C):
        assert delta(s) == leibniz_det(coeff_rows(s))


def involution_exists(F, pairs):
    """Is there a Mobius involution x -> (a x + b)/(c x - a) swapping each pair?"""
    rows = []
    for r, s in pairs:
        if r is None or s is None:
            fin = s if r is None else r
            rows.append([F.one, F.zero, -fin])  # a - c*fin = 0
        else:
            rows.append([r + s, F.one, -(r * s)])
    if leibniz_det(rows) != 0:
        return False
    # kernel vector of a singular 3x3 matrix from a nonzero 2x2 cofactor row
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        v = [rows[j][1] * rows[k][2] - rows[j][2] * rows[k][1],
             rows[j][2] * rows[k][0] - rows[j][0] * rows[k][2],
             rows[j][0] * rows[k][1] - rows[j][1] * rows[k][0]]
        if any(v):
            a, b, c = v
            return a * a + b * c != 0
    return False


@pytest.mark.parametrize("p", [7, 11])
def test_delta_zero_iff_product(p):
    census = algorithm1(p)
    F = field(p)
    found_product = False
    for key in census.keys():
        C = RosenhainTriple(*key).curve()
        for s in splittings(C):
            zero = delta(s) == 0
            assert zero == involution_exists(F, s.pairs)
            assert richelot_codomain(s, C.c).is_product == zero
            found_product |= zero
    assert found_product


def test_glued_curve_has_product_splitting():
    F = field(7)
    C = symmetric_curve(F(5), F(4))
    zero = [s for s in splittings(C) if delta(s) == 0]
    assert zero
    assert all(richelot_codomain(s).is_product for s in zero)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_codomain_is_isogenous(p):
    F = field(p)
    rng = random.Random(p)
    checked = 0
    for _ in range(6):
        ks = rng.sample(range(F.order), rng.choice([5, 6]))
        for c in (F.one, F.nonsquare):
            C = HyperellipticCurve.from_roots([F.from_key(k) for k in ks], c)
            n = count_points(C)
            for s in splittings(C):
                res = richelot_codomain(s, C.c)
                if res.is_product:
                    continue
                assert count_points(res.curve) == n
                checked += 1
    assert checked > 100


@pytest.mark.parametrize("p", [11, 13])
def test_richelot_graph_is_symmetric(p):
    census = brute_force_census(p)
    edges = {k: set(richelot_neighbors(RosenhainTriple(*k))[0]) for k in census.keys()}
    for k, nbrs in edges.items():
        for n in nbrs:
            assert n in edges
            assert k in edges[n]


def test_codomains_superspecial_on_census():
    census = algorithm1(13)
    for key in census.keys():
        C = RosenhainTriple(*key).curve()
        for s in splittings(C):
            res = richelot_codomain(s, C.c)
            if not res.is_product:
                assert is_superspecial(res.curve)
                assert res.curve.roots is not None and len(six_roots(res.curve)) == 6
