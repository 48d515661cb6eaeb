import pytest

from superspecial.census import (
    algorithm1,
    brute_force_census,
    saturate,
    seed_census,
    square_difference_set,
    superspecial_triples,
    supersingular_legendre_params,
)
from superspecial.curves import Kind, hasse_weil_bounds
from superspecial.ff import field
from superspecial.rosenhain import RosenhainTriple, all_rosenhain_defined_over, five_fourth_powers


def test_supersingular_params():
    F7, F3 = field(7), field(3)
    assert supersingular_legendre_params(7) == {F7(2), F7(4), F7(6)}
    assert supersingular_legendre_params(3) == {F3(2)}


def test_p3_empty():
    assert square_difference_set(3) == [field(3)(2)]
    assert len(brute_force_census(3)) == 0
    assert len(brute_force_census(3, pruned=False)) == 0


def test_p5_census_by_scan():
    census = brute_force_census(5)
    assert len(census) == 1
    (entry,) = census.sorted_entries()
    lo, _ = hasse_weil_bounds(5, 2)
    assert entry.classification.kind is Kind.MINIMAL and entry.classification.count == lo == 6


def test_seed_needs_p7():
    with pytest.raises(ValueError):
        seed_census(5)


def test_brute_force_range():
    with pytest.raises(ValueError, match="brute force out of configured range"):
        brute_force_census(17)


def test_saturated_seeds_match_brute_force_p7():
    assert algorithm1(7).keys() == brute_force_census(7).keys()


@pytest.mark.parametrize("p", [5, 7])
def test_pruned_scan_equals_unpruned(p):
    assert superspecial_triples(p, pruned=True) == superspecial_triples(p, pruned=False)


def test_saturate_is_idempotent():
    census = algorithm1(11)
    before = census.keys()
    again = saturate(census)
    assert again.keys() == before


@pytest.mark.parametrize("p", [7, 11, 13])
def test_census_entries_satisfy_structure(p):
    census = algorithm1(p)
    expected = Kind.MAXIMAL if p % 4 == 3 else Kind.MINIMAL
    for e in census.sorted_entries():
        t = RosenhainTriple(*e.key)
        assert all_rosenhain_defined_over(t) and five_fourth_powers(t)
        assert e.classification.kind is expected
        assert e.provenance == "seed" or e.provenance.startswith("richelot:")


def test_rows_deterministic_and_sorted():
    a, b = algorithm1(13).rows(), algorithm1(13).rows()
    assert a == b
    assert [r["key"] for r in a] == [r["key"] for r in brute_force_census(13).rows()]
    assert set(a[0]) == {"p", "key", "lambda", "mu", "nu", "classification", "point_count", "provenance"}
