import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from gfdomains.necklace import (
    Necklace,
    classical_single_peaked,
    enumerate_w_convex,
    flags_to_domain,
    gf_necklace,
    is_arc,
    is_w_convex,
)
from gfdomains.never import KSubset, all_k_subsets, domain_of_scheme, gf_scheme
from gfdomains.orders import Domain, all_orders, identity, prefix_set, restrict, reverse, triples, upper_contour

FISHBURN4 = ["1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231", "4321"]
DIPPED4 = ["1234", "1243", "1423", "1432", "4123", "4132", "4312", "4321"]

k_choice = st.integers(3, 7).flatmap(lambda n: st.sampled_from(all_k_subsets(n)))


def window_arc(s, x):
    """Arc test by matching ``x`` against every window of the circle."""
    x = set(x)
    n = s.n
    if len(x) in (0, n):
        return True
    return any(
        x == {s.circle[(r + i) % n] for i in range(len(x))}
        for r in range(n)
    )


def all_prefixes_w_convex(s, v):
    return all(is_w_convex(s, prefix_set(v, k)) for k in range(1, v.n + 1))


def random_necklaces(n):
    return st.tuples(
        st.permutations(list(range(1, n + 1))),
        st.sets(st.integers(1, n)),
    ).map(lambda p: Necklace(tuple(p[0]), frozenset(p[1])))


any_necklace = st.integers(1, 6).flatmap(random_necklaces)


# --- construction ---

def test_gf_necklace_examples():
    s = gf_necklace(4, [2])
    assert s.circle == (1, 2, 4, 3) and s.black == {3}
    s = gf_necklace(4, [])
    assert s.circle == (1, 4, 3, 2) and s.black == {2, 3}
    s = gf_necklace(3, [2])
    assert s.circle == (1, 2, 3) and s.black == frozenset()
    assert gf_necklace(7, [3, 5]).circle == (1, 3, 5, 7, 6, 4, 2)
    with pytest.raises(ValueError):
        gf_necklace(2, [])


def test_necklace_formats():
    s = gf_necklace(4, [2])
    assert str(s) == "1w,2w,4w,3b"
    assert Necklace.parse("1w,2w,4w,3b") == s
    assert s.to_json() == {"circle": [1, 2, 4, 3], "black": [3]}
    assert Necklace.parse(json.dumps(s.to_json())) == s
    assert s.colors == {1: "white", 2: "white", 4: "white", 3: "black"}
    for bad in ["1w,2x", "1w,3w", "w1"]:
        with pytest.raises(ValueError):
            Necklace.parse(bad)


# --- arcs and w-convexity ---

def test_is_arc_examples():
    s = Necklace((1, 2, 4, 3))
    assert is_arc(s, {3, 1})
    assert not is_arc(s, {1, 4})
    assert is_arc(s, {1, 2, 3, 4})
    assert is_arc(s, set())


@given(any_necklace, st.data())
@settings(deadline=None)
def test_is_arc_matches_window_oracle(s, data):
    x = data.draw(st.sets(st.sampled_from(s.circle)))
    assert is_arc(s, x) == window_arc(s, x)


def test_is_w_convex_examples():
    s = gf_necklace(4, [2])
    assert not is_w_convex(s, {3})
    assert is_w_convex(s, {2})
    assert not is_w_convex(s, {1, 3})
    with pytest.raises(ValueError):
        is_w_convex(s, set())


def test_enumerate_w_convex_all_white_triangle():
    fam = enumerate_w_convex(Necklace((1, 2, 3)))
    assert fam == {frozenset(x) for x in [{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}]}


def test_enumerate_w_convex_single_dipped_necklace():
    fam = enumerate_w_convex(gf_necklace(4, []))
    assert {frozenset({1}), frozenset({4}), frozenset({1, 4}), frozenset({1, 2, 3, 4})} <= fam
    assert frozenset({2}) not in fam


@given(any_necklace)
@settings(max_examples=60, deadline=None)
def test_w_convex_family_matches_subset_scan(s):
    brute = {
        frozenset(c)
        for k in range(1, s.n + 1)
        for c in itertools.combinations(s.circle, k)
        if is_w_convex(s, c)
    }
    fam = enumerate_w_convex(s)
    assert fam == brute
    if s.n >= 2:
        assert frozenset(s.circle) in fam


# --- flag domains ---

def test_flags_reference_tables():
    assert flags_to_domain(gf_necklace(4, [2])).as_strings() == FISHBURN4
    assert flags_to_domain(gf_necklace(4, [])).as_strings() == DIPPED4


def test_flags_n3():
    assert flags_to_domain(gf_necklace(3, [])).as_strings() == ["123", "132", "312", "321"]
    assert flags_to_domain(gf_necklace(3, [2])).as_strings() == ["123", "213", "231", "321"]


@given(any_necklace)
@settings(max_examples=60, deadline=None)
def test_flags_match_prefix_filter(s):
    oracle = Domain(s.n, tuple(v for v in all_orders(s.n) if all_prefixes_w_convex(s, v)))
    got = flags_to_domain(s)
    assert got == oracle
    assert all(v.ranking[0] not in s.black for v in got)


@given(k_choice)
@settings(max_examples=40, deadline=None)
def test_flags_equal_scheme_and_prefixes_are_arcs(K):
    s = gf_necklace(K.n, K)
    d = flags_to_domain(s)
    assert d == domain_of_scheme(gf_scheme(K.n, K))
    for v in d:
        assert all(is_arc(s, prefix_set(v, k)) for k in range(v.n + 1))
        assert all_prefixes_w_convex(s, v)


@given(k_choice)
@settings(max_examples=40, deadline=None)
def test_black_never_top_white_never_bottom(K):
    s = gf_necklace(K.n, K)
    d = flags_to_domain(s)
    for t in triples(K.n):
        middle = t.b
        for v in d:
            r = restrict(v, t)
            if middle in s.black:
                assert r[0] != middle
            else:
                assert r[2] != middle


# --- classical single-peaked ---

def contours_are_intervals(v):
    for a in v:
        u = upper_contour(v, a)
        if u and max(u) - min(u) + 1 != len(u):
            return False
    return True


@pytest.mark.parametrize("n", range(1, 8))
def test_classical_single_peaked_oracle(n):
    d = classical_single_peaked(n)
    assert d == Domain(n, tuple(v for v in all_orders(n) if contours_are_intervals(v)))
    assert len(d) == 2 ** (n - 1)
    assert identity(n) in d and reverse(identity(n)) in d


def test_classical_single_peaked_n3():
    assert classical_single_peaked(3).as_strings() == ["123", "213", "231", "321"]


@pytest.mark.parametrize("n", range(3, 8))
def test_full_k_is_single_peaked(n):
    full = KSubset(n, frozenset(range(2, n)))
    assert flags_to_domain(gf_necklace(n, full)) == classical_single_peaked(n)
