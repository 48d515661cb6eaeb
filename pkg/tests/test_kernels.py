import random
from itertools import combinations

import numpy as np
from hypothesis import given, settings, strategies as st

from superspecial import kernels
from superspecial.curves import HyperellipticCurve, cartier_manin
from superspecial.ff import field
from superspecial.poly import Polynomial


def to_pair(F, polys):
    width = max(f.degree for f in polys) + 1
    c0 = np.zeros((len(polys), width), dtype=np.int64)
    c1 = np.zeros_like(c0)
    for i, f in enumerate(polys):
        for j, a in enumerate(f.coeffs):
            c0[i, j], c1[i, j] = a.c0, a.c1
    return c0, c1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7, 11, 13]), st.sampled_from([2, 3, 4]), st.integers(0, 2**32))
def test_batch_cartier_manin_matches_scalar(p, genus, seed):
    F = field(p)
    rng = random.Random(seed)
    polys = []
    for _ in range(4):
        coeffs = [F.from_key(rng.randrange(F.order)) for _ in range(2 * genus + 2)]
        coeffs[-1] = F.one
        polys.append(Polynomial(F, coeffs))
    batch = kernels.batch_cartier_manin(F, to_pair(F, polys), genus)
    for f, M in zip(polys, batch):
        C = HyperellipticCurve(f, 1, genus, check=False)
        expected = [[[e.c0, e.c1] for e in row] for row in cartier_manin(C)]
        assert M.tolist() == expected


def test_batch_from_roots_matches_polynomial():
    F = field(11)
    rng = random.Random(4)
    roots = [[F.from_key(rng.randrange(F.order)) for _ in range(3)] for _ in range(7)]
    cols = [kernels.split_keys(F, np.array([r[k].key() for r in roots])) for k in range(3)]
    c0, c1 = kernels.batch_from_roots(F, [(0, 0), (1, 0)], cols)  # base polynomial x
    for i, rs in enumerate(roots):
        f = Polynomial.from_roots(F, [F.zero] + rs)
        assert [F(int(a), int(b)) for a, b in zip(c0[i], c1[i])] == list(f.coeffs)


def test_evaluate_everywhere_matches_horner():
    F = field(7)
    f = Polynomial(F, [F(1, 2), F(3), F(0, 5), F(6, 6)])
    keys = kernels.evaluate_everywhere(F, [(a.c0, a.c1) for a in f.coeffs])
    assert [F.from_key(int(k)) for k in keys] == [f(x) for x in F.elements()]


def test_square_and_chi_tables():
    F = field(5)
    sq = kernels.square_table(5)
    chi = kernels.chi_table(5)
    for x in F.elements():
        expected = 0 if not x else (1 if x.is_square() else -1)
        assert chi[x.key()] == expected
        assert sq[x.key()] == (bool(x) and x.is_square())


def test_combination_chunks_cover_everything():
    items = list(range(2, 14))
    got = np.concatenate(list(kernels.combination_chunks(items, 3, chunk=17)))
    assert [tuple(r) for r in got.tolist()] == list(combinations(items, 3))


def test_map_chunks_threads_agree():
    items = list(range(40))
    chunks = lambda: kernels.combination_chunks(items, 2, chunk=50)
    fn = lambda block: [int(r.sum()) for r in block if r.sum() % 7 == 0]
    assert kernels.map_chunks(fn, chunks(), 1) == kernels.map_chunks(fn, chunks(), 3)


def test_vmul_matches_scalar():
    F = field(13)
    rng = random.Random(9)
    a = np.array([rng.randrange(F.order) for _ in range(50)])
    b = np.array([rng.randrange(F.order) for _ in range(50)])
    prod = kernels.join_keys(F, kernels.vmul(F, kernels.split_keys(F, a), kernels.split_keys(F, b)))
    assert prod.tolist() == [(F.from_key(int(x)) * F.from_key(int(y))).key() for x, y in zip(a, b)]
