import csv
import io

import pytest

from gfdomains.cardinality import CSV_HEADER, census, census_csv, extremality_report, fishburn_formula
from gfdomains.never import KSubset, domain_of_scheme, fishburn_K, gf_scheme

# evaluated by hand from the closed form, e.g. n=6: 9*8 - (9/2)*C(4,2) = 72 - 27
FORMULA = {3: 4, 4: 9, 5: 20, 6: 45, 7: 100, 8: 222}


@pytest.mark.parametrize("n,size", FORMULA.items())
def test_formula_values(n, size):
    assert fishburn_formula(n) == size


@pytest.mark.parametrize("n", range(3, 9))
def test_formula_matches_enumeration(n):
    assert len(domain_of_scheme(gf_scheme(n, fishburn_K(n)))) == fishburn_formula(n)


def test_formula_is_integral_far_out():
    for n in range(3, 60):
        assert isinstance(fishburn_formula(n), int)
    with pytest.raises(ValueError):
        fishburn_formula(2)


def test_census_n4():
    rows = census(4)
    assert [(str(r.K), r.size) for r in rows] == [("-", 8), ("2", 9), ("3", 9), ("2-3", 8)]


def test_census_n3():
    assert [r.size for r in census(3)] == [4, 4]


@pytest.mark.parametrize("n", range(3, 9))
def test_census_extremes_and_duality(n):
    rows = census(n)
    assert len(rows) == 2 ** (n - 2)
    by_k = {r.K: r.size for r in rows}
    assert by_k[KSubset(n)] == by_k[KSubset(n, frozenset(range(2, n)))] == 2 ** (n - 1)
    for K, size in by_k.items():
        assert by_k[K.complement()] == size


def test_census_caps():
    with pytest.raises(ValueError):
        census(9)
    with pytest.raises(ValueError):
        census(8, flags=True)


def test_census_with_flags_and_workers():
    rows = census(5, flags=True, workers=2)
    assert rows == census(5, flags=True)
    assert all(all(r.flags.values()) for r in rows)


def test_extremality_n4():
    rep = extremality_report(census(4))
    assert (rep.min_size, rep.max_size) == (8, 9)
    assert {str(k) for k in rep.argmin} == {"-", "2-3"}
    assert {str(k) for k in rep.argmax} == {"2", "3"}
    assert rep.fishburn_attains_max


def test_extremality_n3_and_n5():
    rep3 = extremality_report(census(3))
    assert rep3.min_size == rep3.max_size == 4
    rep5 = extremality_report(census(5))
    assert rep5.fishburn_size == 20
    assert rep5.fishburn_attains_max == (rep5.max_size == 20)


def test_csv_layout():
    rows = census(4, flags=True)
    text = census_csv(rows, extremality_report(rows))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[0] == "n,K,size,condorcet,copious,maximal,maximal_width,directly_connected,spoc"
    body = list(csv.reader(io.StringIO("\n".join(lines[1:5]))))
    assert body[1][:3] == ["4", "2", "9"] and body[1][3:] == ["true"] * 6
    assert all(line.startswith("#") for line in lines[5:]) and len(lines) > 5
    size_only = census_csv(census(4)).splitlines()[1]
    assert size_only == "4,-,8,,,,,,"
