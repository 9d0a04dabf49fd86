import math

import pytest

from gfdomains.analysis import has_maximal_width, is_condorcet, is_semi_connected, is_spoc
from gfdomains.orders import identity, prefix_set, reverse
from gfdomains.single_crossing import (
    SwapSequence,
    chain_orders,
    chain_to_domain,
    enumerate_maximal_chains,
    id2_obstruction,
    id2_witnesses,
    pairs_fit_one_circle,
    relay_chain,
    thm7_counterexamples,
    verify_thm7,
)


def staircase_tableaux(n):
    """Hook length formula for shape (n-1, n-2, ..., 1); counts maximal chains of S_n."""
    shape = list(range(n - 1, 0, -1))
    cells = sum(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in shape[i + 1:] if r > j)
            hooks *= arm + leg + 1
    return math.factorial(cells) // hooks


def test_swap_sequence_text():
    sw = SwapSequence.parse("1-2 1-3 1-4 3-4 2-4 2-3")
    assert sw.n == 4 and str(sw) == "1-2 1-3 1-4 3-4 2-4 2-3"
    with pytest.raises(ValueError):
        SwapSequence.parse("1-2 1-2 2-3")
    with pytest.raises(ValueError):
        SwapSequence.parse("1-2 1-3")
    with pytest.raises(ValueError):
        SwapSequence.parse("1:2")


def test_chain_to_domain_examples():
    assert chain_to_domain(SwapSequence.parse("1-2 1-3 2-3")).as_strings() == ["123", "213", "231", "321"]
    assert chain_to_domain(SwapSequence.parse("2-3 1-3 1-2")).as_strings() == ["123", "132", "312", "321"]
    with pytest.raises(ValueError, match="neighbours"):
        chain_orders(SwapSequence.parse("1-3 1-2 2-3"))


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 16), (5, 768)])
def test_chain_counts(n, count):
    chains = enumerate_maximal_chains(n)
    assert len(chains) == count == staircase_tableaux(n)
    assert len(set(chains)) == count


def test_chain_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_maximal_chains(6)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_every_chain_is_condorcet_wide_and_semi_connected(n):
    for sw in enumerate_maximal_chains(n):
        orders = chain_orders(sw)
        assert orders[0] == identity(n) and orders[-1] == reverse(identity(n))
        d = chain_to_domain(sw)
        assert len(d) == math.comb(n, 2) + 1
        assert is_condorcet(d)
        assert has_maximal_width(d) and is_semi_connected(d)


def test_relay_chain():
    assert str(relay_chain(3)) == "1-2 1-3 2-3"
    assert str(relay_chain(4)) == "1-2 1-3 1-4 3-4 2-4 2-3"
    for n in range(3, 9):
        sw = relay_chain(n)
        assert len(sw.swaps) == math.comb(n, 2)
        assert sw.swaps[: n - 1] == tuple((1, k) for k in range(2, n + 1))
        assert is_condorcet(chain_to_domain(sw))


def test_relay_chain_bottom_pairs():
    # bottom pairs of the n=4 relay chain: 34 34 14 14 13 13 12
    bottoms = [prefix_set(reverse(v), 2) for v in chain_orders(relay_chain(4))]
    assert bottoms == [{3, 4}, {3, 4}, {1, 4}, {1, 4}, {1, 3}, {1, 3}, {1, 2}]
    assert [str(v) for v in id2_witnesses(4)] == ["4321", "2431", "2314"]


@pytest.mark.parametrize("n", range(4, 10))
def test_id2_obstruction(n):
    assert id2_obstruction(n)


def test_pairs_fit_one_circle():
    assert pairs_fit_one_circle([{1, 2}, {1, 3}], 4) is not None
    assert pairs_fit_one_circle([{1, 2}, {1, 3}, {1, 4}], 4) is None
    assert pairs_fit_one_circle([{1, 2}, {1, 3}, {1, 4}], 6) is None


def test_single_crossing_never_spoc_exhaustive():
    assert verify_thm7(4)
    assert verify_thm7(5)
    with pytest.raises(ValueError):
        verify_thm7(3)


def test_n3_chains_are_spoc():
    # below n=4 both chain domains are maximal and single-peaked on a circle
    for sw in enumerate_maximal_chains(3):
        assert is_spoc(chain_to_domain(sw)) is not None
    assert len(thm7_counterexamples(3)) == 2
