import itertools
from fractions import Fraction

import pytest

from conftest import GRADES2, GRADES3
from fuzzint import (FuzzyInterval, FuzzySet, NotAFuzzyInterval, chain,
                     classify, is_fuzzy_convex_sublattice, is_fuzzy_interval,
                     is_fuzzy_sublattice, make_interval)
from fuzzint.fuzzyintervals import (convex_violation, interval_cut_violation,
                                    join_family, meet_family,
                                    sublattice_violation)
from fuzzint.laws import enumerate_fuzzy_intervals, enumerate_fuzzy_sets

H = Fraction(1, 2)


# -- predicates ---------------------------------------------------------


def test_characteristic_of_non_sublattice(b2):
    # {01,10,11} is not meet-closed: 01 ⊓ 10 = 00 is missing
    m = FuzzySet(b2, {"00": "0", "01": "1", "10": "1", "11": "1"})
    assert not is_fuzzy_sublattice(m)
    assert sublattice_violation(m) == ("01", "10")


def test_characteristic_of_sublattice_not_convex(chain3):
    # {0,2} is a sublattice of the chain but omits the midpoint
    m = FuzzySet(chain3, {"0": "1", "1": "0", "2": "1"})
    assert is_fuzzy_sublattice(m)
    assert not is_fuzzy_convex_sublattice(m)
    assert convex_violation(m) == ("0", "2", "1")


def test_diamond_counterexample(diamond):
    m = FuzzySet(diamond, {"0": "1", "a": "1", "b": "1", "c": "0", "1": "1"})
    assert is_fuzzy_sublattice(m)
    assert not is_fuzzy_convex_sublattice(m)
    assert not is_fuzzy_interval(m)


def test_classify_ladder(diamond):
    m = FuzzySet(diamond, {"0": "1", "a": "1", "b": "1", "c": "0", "1": "1"})
    got = classify(m)
    assert got.label == "fuzzy-sublattice"
    assert got.failed == "fuzzy-convex-sublattice"
    x, y, z = got.witness
    # witness is reproducible and genuinely violates convexity
    assert z in diamond.between(diamond.meet(x, y), diamond.join(x, y))
    assert m(z) < min(m(x), m(y))
    assert got.witness == ("0", "1", "c")


def test_classify_none(b2):
    m = FuzzySet(b2, {"00": "0", "01": "1", "10": "1", "11": "1"})
    got = classify(m)
    assert got.label == "none"
    assert got.failed == "fuzzy-sublattice"
    assert got.witness == ("01", "10")


def test_classify_interval(chain3):
    m = FuzzySet(chain3, {"0": "1/2", "1": "1", "2": "1/2"})
    assert classify(m).label == "fuzzy-interval"
    assert classify(m).failed is None


def test_constant_sets_are_intervals(pentagon):
    for g in GRADES3:
        assert is_fuzzy_interval(FuzzySet.constant(pentagon, g))


def test_convex_equals_interval_on_finite_carriers(diamond, pentagon):
    # on a finite lattice the two notions coincide; check every fuzzy set
    for lat in (diamond, pentagon):
        for m in enumerate_fuzzy_sets(lat, GRADES3):
            assert is_fuzzy_convex_sublattice(m) == is_fuzzy_interval(m)


def test_boundary_grade_equality_clause(diamond):
    # convexity forces M(x⊓y) ∧ M(x⊔y) = M(x) ∧ M(y) on every pair
    for m in enumerate_fuzzy_intervals(diamond, GRADES3):
        vals = m.fuzzy
        for x, y in itertools.product(diamond, repeat=2):
            lhs = min(vals(diamond.meet(x, y)), vals(diamond.join(x, y)))
            assert lhs == min(vals(x), vals(y))


# -- constructor and cuts ------------------------------------------------


def test_constructor_validates(diamond):
    bad = FuzzySet(diamond, {"0": "1", "a": "1", "b": "1", "c": "0", "1": "1"})
    with pytest.raises(NotAFuzzyInterval) as exc:
        FuzzyInterval(bad)
    assert "omits" in str(exc.value)


def test_from_interval(chain3):
    fi = FuzzyInterval.from_interval(make_interval(chain3, "0", "1"))
    assert fi.values == (1, 1, 0)
    assert fi.cut_interval(Fraction(1)) == make_interval(chain3, "0", "1")


def test_cut_interval_and_thresholds(chain3):
    fi = FuzzyInterval(FuzzySet(chain3, {"0": "1/2", "1": "1", "2": "1/2"}))
    assert fi.thresholds() == (0, H, 1)
    assert fi.cut_interval(H) == make_interval(chain3, "0", "2")
    assert fi.cut_interval(Fraction(1)) == make_interval(chain3, "1", "1")
    assert fi.cut(Fraction(1)) == frozenset({"1"})


def test_endpoint_functions(chain3):
    fi = FuzzyInterval(FuzzySet(chain3, {"0": "1/2", "1": "1", "2": "1/2"}))
    ep = fi.endpoint_functions()
    assert ep.lower[H] == "0" and ep.upper[H] == "2"
    assert ep.lower[Fraction(1)] == "1" and ep.upper[Fraction(1)] == "1"


def test_endpoint_empty_cut_convention(chain3):
    # empty cuts report crossed endpoints: lower = top, upper = bottom
    fi = FuzzyInterval(FuzzySet(chain3, {"0": "1/2", "1": "1/2", "2": "0"}))
    ep = fi.endpoint_functions()
    assert ep.lower[Fraction(1)] == chain3.top
    assert ep.upper[Fraction(1)] == chain3.bottom


def test_endpoint_monotonicity(pentagon):
    for fi in enumerate_fuzzy_intervals(pentagon, GRADES3):
        ep = fi.endpoint_functions()
        for p, q in itertools.combinations(ep.thresholds, 2):
            # p < q: lower endpoints rise, upper endpoints fall
            assert pentagon.leq(ep.lower[p], ep.lower[q])
            assert pentagon.leq(ep.upper[q], ep.upper[p])


# -- meet and join -------------------------------------------------------


def test_meet_is_pointwise(chain3):
    a = FuzzyInterval(FuzzySet(chain3, {"0": "1", "1": "1/2", "2": "0"}))
    b = FuzzyInterval(FuzzySet(chain3, {"0": "0", "1": "1/2", "2": "1"}))
    assert a.meet(b).values == (0, H, 0)


def test_join_fills_the_gap(chain3):
    a = FuzzyInterval(FuzzySet(chain3, {"0": "1", "1": "1/2", "2": "0"}))
    b = FuzzyInterval(FuzzySet(chain3, {"0": "0", "1": "1/2", "2": "1"}))
    assert a.join(b).values == (1, 1, 1)


def test_join_cut_is_hull_of_cuts(diamond):
    fis = enumerate_fuzzy_intervals(diamond, GRADES3)
    for a, b in itertools.product(fis[:20], fis[:20]):
        j = a.join(b)
        for p in sorted(set(a.thresholds()) | set(b.thresholds())):
            assert j.cut_interval(p) == (a.cut_interval(p) | b.cut_interval(p))


def test_join_is_least_upper_bound(pentagon):
    fis = enumerate_fuzzy_intervals(pentagon, GRADES2)
    for a, b in itertools.product(fis, repeat=2):
        j = a.join(b)
        assert a.leq(j) and b.leq(j)
        for c in fis:
            if a.leq(c) and b.leq(c):
                assert j.leq(c)


def test_meet_join_stay_within_grade_set(diamond):
    fis = enumerate_fuzzy_intervals(diamond, GRADES3)
    allowed = set(GRADES3)
    for a, b in itertools.product(fis[:16], fis[:16]):
        assert set(a.meet(b).values) <= allowed
        assert set(a.join(b).values) <= allowed


def test_families(chain3):
    a = FuzzyInterval(FuzzySet(chain3, {"0": "1", "1": "1/2", "2": "0"}))
    b = FuzzyInterval(FuzzySet(chain3, {"0": "0", "1": "1/2", "2": "1"}))
    assert meet_family(chain3, [a, b]).values == a.meet(b).values
    assert join_family(chain3, [a, b]).values == a.join(b).values
    assert meet_family(chain3, []).values == (1, 1, 1)
    assert join_family(chain3, []).values == (0, 0, 0)


def test_two_valued_fuzzy_intervals_match_crisp_intervals():
    # with grades {0,1} fuzzy intervals are exactly characteristic functions
    # of crisp intervals
    from fuzzint.laws import enumerate_intervals
    for n in (2, 3, 4):
        lat = chain(n)
        fis = enumerate_fuzzy_intervals(lat, GRADES2)
        ivs = enumerate_intervals(lat)
        assert len(fis) == len(ivs)
        crisp_members = {iv.members() for iv in ivs}
        fuzzy_cuts = {fi.cut(Fraction(1)) for fi in fis}
        assert crisp_members == fuzzy_cuts


def test_interval_cut_violation_reports_gap(diamond):
    bad = FuzzySet(diamond, {"0": "1", "a": "1", "b": "1", "c": "0", "1": "1"})
    p, z = interval_cut_violation(bad)
    assert p == 1 and z == "c"
