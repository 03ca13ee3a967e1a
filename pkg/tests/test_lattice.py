import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzint import (CycleError, FiniteLattice, NotALattice, SizeLimit,
                     UnknownElement, boolean_lattice, build_lattice, chain,
                     is_distributive, is_distributive_dual, m3, n5,
                     product_lattice, standard_lattice)


def test_chain_order(chain3):
    assert list(chain3) == ["0", "1", "2"]
    assert chain3.bottom == "0"
    assert chain3.top == "2"
    assert chain3.leq("0", "2")
    assert not chain3.leq("2", "1")
    assert chain3.meet("1", "2") == "1"
    assert chain3.join("0", "1") == "1"


def test_duplicate_covers_are_tolerated():
    lat = build_lattice(["x", "y"], [("x", "y"), ("x", "y")])
    assert lat.leq("x", "y")
    assert lat.covers() == (("x", "y"),)


def test_self_cover_is_a_cycle():
    with pytest.raises(CycleError):
        build_lattice(["x"], [("x", "x")])


def test_two_cycle():
    with pytest.raises(CycleError) as exc:
        build_lattice(["x", "y"], [("x", "y"), ("y", "x")])
    assert "cycle" in str(exc.value)


def test_longer_cycle_is_detected():
    with pytest.raises(CycleError):
        build_lattice(list("abcd"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "b")])


def test_empty_carrier_rejected():
    with pytest.raises(ValueError):
        build_lattice([], [])


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        build_lattice(["x", "x"], [])


def test_unknown_cover_endpoint():
    with pytest.raises(UnknownElement):
        build_lattice(["x"], [("x", "y")])


def test_two_maximal_elements_not_a_lattice():
    # x < y, x < z and nothing above {y, z}
    with pytest.raises(NotALattice) as exc:
        build_lattice(["x", "y", "z"], [("x", "y"), ("x", "z")])
    assert exc.value.pair == ("y", "z")


def test_no_meet_not_a_lattice():
    # two incomparable maximal lower bounds for the top pair
    covers = [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y"), ("x", "t"), ("y", "t"), ("z", "a"), ("z", "b")]
    with pytest.raises(NotALattice):
        build_lattice(["a", "b", "x", "y", "z", "t"], covers)


def test_meet_set_conventions(diamond):
    assert diamond.meet_set([]) == "1"
    assert diamond.join_set([]) == "0"
    assert diamond.meet_set(["a", "b", "c"]) == "0"
    assert diamond.join_set(["a", "b"]) == "1"


def test_between(diamond):
    assert diamond.between("0", "1") == ("0", "1", "a", "b", "c")
    assert diamond.between("a", "a") == ("a",)
    assert diamond.between("1", "0") == ()


def test_covers_roundtrip(pentagon):
    rebuilt = build_lattice(list(pentagon), pentagon.covers())
    assert rebuilt == pentagon
    assert rebuilt.covers() == pentagon.covers()


def test_m3_structure(diamond):
    for x, y in itertools.combinations(["a", "b", "c"], 2):
        assert diamond.meet(x, y) == "0"
        assert diamond.join(x, y) == "1"


def test_n5_structure(pentagon):
    assert pentagon.leq("a", "c")
    assert not pentagon.leq("b", "c")
    assert pentagon.meet("c", "b") == "0"
    assert pentagon.join("a", "b") == "1"


def test_is_distributive_on_fixtures(chain5, b3, diamond, pentagon):
    assert is_distributive(chain5) == (True, None)
    assert is_distributive(b3) == (True, None)
    flag, witness = is_distributive(diamond)
    assert flag is False and witness == ("a", "b", "c")
    flag, witness = is_distributive(pentagon)
    assert flag is False and witness == ("c", "a", "b")


def test_distributive_witness_is_a_real_violation(pentagon):
    x, y, z = is_distributive(pentagon)[1]
    lhs = pentagon.meet(x, pentagon.join(y, z))
    rhs = pentagon.join(pentagon.meet(x, y), pentagon.meet(x, z))
    assert lhs != rhs


def test_dual_law_agrees_with_primal():
    for lat in (chain(4), boolean_lattice(3), m3(), n5(), product_lattice(chain(2), chain(3))):
        assert is_distributive(lat)[0] == is_distributive_dual(lat)[0]


def test_boolean_lattice_labels(b2):
    assert list(b2) == ["00", "01", "10", "11"]
    assert b2.join("01", "10") == "11"
    assert b2.meet("01", "10") == "00"


def test_product_is_componentwise(prod23):
    assert prod23.meet(("1", "0"), ("0", "2")) == ("0", "0")
    assert prod23.join(("1", "0"), ("0", "2")) == ("1", "2")


def test_product_of_two_chains_matches_boolean_square(b2):
    prod = product_lattice(chain(2), chain(2))
    # exhaustive isomorphism check via the obvious bit-pairing map
    iso = {("0", "0"): "00", ("0", "1"): "01", ("1", "0"): "10", ("1", "1"): "11"}
    for x in prod:
        for y in prod:
            assert prod.leq(x, y) == b2.leq(iso[x], iso[y])


def test_standard_lattice_names():
    assert list(standard_lattice("chain4")) == ["0", "1", "2", "3"]
    assert list(standard_lattice("chain(4)")) == ["0", "1", "2", "3"]
    assert standard_lattice("m3") == m3()
    assert standard_lattice("n5") == n5()
    assert standard_lattice("boolean2") == boolean_lattice(2)
    assert standard_lattice("product(chain2,chain2)") == product_lattice(chain(2), chain(2))
    with pytest.raises(ValueError):
        standard_lattice("dodecahedron")


def test_structural_equality_ignores_name():
    a = build_lattice(["x", "y"], [("x", "y")], name="one")
    b = build_lattice(["x", "y"], [("x", "y")], name="two")
    assert a == b
    assert hash(a) == hash(b)


def test_size_limit():
    with pytest.raises(SizeLimit):
        FiniteLattice(range(5), [(i, i + 1) for i in range(4)], max_elements=3)


def test_unknown_element_lookup(chain3):
    with pytest.raises(UnknownElement):
        chain3.meet("0", "9")
    assert "9" not in chain3


def _glb(lat, x, y):
    lower = [z for z in lat if lat.leq(z, x) and lat.leq(z, y)]
    best = [z for z in lower if all(lat.leq(w, z) for w in lower)]
    assert len(best) == 1
    return best[0]


def test_meet_matches_definition_on_fixtures(diamond, pentagon, prod23):
    for lat in (diamond, pentagon, prod23):
        for x in lat:
            for y in lat:
                assert lat.meet(x, y) == _glb(lat, x, y)


@st.composite
def random_cover_sets(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    labels = [f"e{i}" for i in range(n)]
    pairs = st.tuples(st.sampled_from(labels), st.sampled_from(labels))
    covers = draw(st.lists(pairs, max_size=10))
    return labels, covers


@settings(max_examples=200, deadline=None)
@given(random_cover_sets())
def test_random_covers_build_or_raise_cleanly(case):
    labels, covers = case
    try:
        lat = build_lattice(labels, covers)
    except (CycleError, NotALattice):
        return
    # when construction succeeds the result must behave like a lattice
    for x in lat:
        assert lat.leq(lat.bottom, x)
        assert lat.leq(x, lat.top)
        for y in lat:
            m, j = lat.meet(x, y), lat.join(x, y)
            assert lat.leq(m, x) and lat.leq(m, y)
            assert lat.leq(x, j) and lat.leq(y, j)
            assert lat.leq(x, y) == (m == x) == (j == y)
