"""Single-crossing domains as maximal chains from ``12..n`` to ``n..21``.

A chain is a sequence of swaps of neighbouring alternatives in which every
pair of alternatives is swapped exactly once; the orders it passes through
form a single-crossing domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .analysis import CircularArrangement, canonical_arrangements, is_maximal_condorcet, is_spoc
from .orders import Domain, LinearOrder, check_n, prefix_set, reverse

__all__ = [
    "MAX_CHAIN_N",
    "SwapSequence",
    "chain_orders",
    "chain_to_domain",
    "enumerate_maximal_chains",
    "relay_chain",
    "thm7_counterexamples",
    "verify_thm7",
    "id2_witnesses",
    "pairs_fit_one_circle",
    "id2_obstruction",
]

# 768 chains at n=5, 292864 at n=6
MAX_CHAIN_N = 5

Pair = tuple[int, int]


@dataclass(frozen=True)
class SwapSequence:
    n: int
    swaps: tuple[Pair, ...]

    def __post_init__(self):
        check_n(self.n, lower=1)
        swaps = tuple(tuple(sorted((int(x), int(y)))) for x, y in self.swaps)
        for x, y in swaps:
            if x == y or not (1 <= x and y <= self.n):
                raise ValueError(f"bad swap pair {x}-{y} for n={self.n}")
        if len(set(swaps)) != len(swaps):
            raise ValueError("a pair is swapped more than once")
        if len(swaps) != math.comb(self.n, 2):
            raise ValueError(f"a maximal chain needs {math.comb(self.n, 2)} swaps, got {len(swaps)}")
        object.__setattr__(self, "swaps", swaps)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> SwapSequence:
        """Read whitespace-separated pairs such as ``"1-2 1-3 2-3"``."""
        pairs = []
        for item in text.split():
            try:
                x, y = item.split("-")
                pairs.append((int(x), int(y)))
            except ValueError:
                raise ValueError(f"bad swap {item!r}; expected 'x-y'") from None
        if n is None:
            n = max((max(p) for p in pairs), default=1)
        return cls(n, tuple(pairs))

    def __str__(self) -> str:
        return " ".join(f"{x}-{y}" for x, y in self.swaps)


def chain_orders(sw: SwapSequence) -> list[LinearOrder]:
    """The ``C(n,2) + 1`` orders visited, starting at ``12..n``."""
    r = list(range(1, sw.n + 1))
    out = [LinearOrder(tuple(r))]
    for x, y in sw.swaps:
        i, j = r.index(x), r.index(y)
        if abs(i - j) != 1:
            raise ValueError(f"swap {x}-{y} is not of neighbours in {''.join(map(str, r))}")
        r[i], r[j] = r[j], r[i]
        out.append(LinearOrder(tuple(r)))
    return out


def chain_to_domain(sw: SwapSequence) -> Domain:
    return Domain(sw.n, tuple(chain_orders(sw)))


def enumerate_maximal_chains(n: int) -> list[SwapSequence]:
    """Every maximal chain, depth first, always trying the leftmost swap first."""
    check_n(n, limit=MAX_CHAIN_N)
    total = math.comb(n, 2)
    out = []
    r = list(range(1, n + 1))
    swaps: list[Pair] = []

    def walk() -> None:
        if len(swaps) == total:
            out.append(SwapSequence(n, tuple(swaps)))
            return
        for i in range(n - 1):
            # only uninverted neighbours may swap, so each pair flips exactly once
            if r[i] < r[i + 1]:
                swaps.append((r[i], r[i + 1]))
                r[i], r[i + 1] = r[i + 1], r[i]
                walk()
                r[i], r[i + 1] = r[i + 1], r[i]
                swaps.pop()

    walk()
    return out


def relay_chain(n: int) -> SwapSequence:
    """1 sinks to the bottom first, then n, n-1, ... each bubble up to the top of what is left."""
    check_n(n, lower=3)
    swaps = [(1, k) for k in range(2, n + 1)]
    r = list(range(2, n + 1))
    # r is the block above 1; move its largest unsettled element to the front each round
    for settled in range(len(r)):
        top = max(r[settled:])
        i = r.index(top)
        while i > settled:
            swaps.append((r[i - 1], top))
            r[i - 1], r[i] = r[i], r[i - 1]
            i -= 1
    return SwapSequence(n, tuple(swaps))


def thm7_counterexamples(n: int) -> list[SwapSequence]:
    """Maximal chains whose domain is a maximal Condorcet domain yet single-peaked on a circle."""
    bad = []
    for sw in enumerate_maximal_chains(n):
        d = chain_to_domain(sw)
        if is_maximal_condorcet(d) and is_spoc(d) is not None:
            bad.append(sw)
    return bad


def verify_thm7(n: int) -> bool:
    if not 4 <= n <= MAX_CHAIN_N:
        raise ValueError(f"exhaustive check covers 4 <= n <= {MAX_CHAIN_N}, got n={n}")
    return not thm7_counterexamples(n)


def id2_witnesses(n: int) -> list[LinearOrder]:
    """Orders of the relay chain whose bottom two alternatives are {1,2}, {1,3}, {1,4}.

    The bottom pair of ``v`` is the top pair of its reversal, and the
    complement of a circular arc is again an arc, so these three pairs must all
    be arcs of any circle on which the chain is single-peaked.
    """
    check_n(n, lower=4)
    wanted = [frozenset({1, k}) for k in (2, 3, 4)]
    found: dict[frozenset[int], LinearOrder] = {}
    for v in chain_orders(relay_chain(n)):
        pair = prefix_set(reverse(v), 2)
        if pair in wanted and pair not in found:
            found[pair] = v
    return [found[p] for p in wanted if p in found]


def pairs_fit_one_circle(pairs: list[frozenset[int]], n: int) -> CircularArrangement | None:
    """A circle on which every two-element set in ``pairs`` is an arc, if there is one."""
    for arr in canonical_arrangements(n):
        pos = {x: i for i, x in enumerate(arr.circle)}
        if all((pos[a] - pos[b]) % n in (1, n - 1) for a, b in map(tuple, pairs)):
            return arr
    return None


def id2_obstruction(n: int, exhaustive_limit: int = 8) -> bool:
    """True when the relay chain carries the {1,2}, {1,3}, {1,4} pattern and no circle fits it.

    A two-element arc is a pair of neighbours and 1 has only two neighbours;
    up to ``exhaustive_limit`` this is also confirmed against every arrangement.
    """
    witnesses = id2_witnesses(n)
    if len(witnesses) != 3:
        return False
    pairs = [prefix_set(reverse(v), 2) for v in witnesses]
    if n <= exhaustive_limit:
        return pairs_fit_one_circle(pairs, n) is None
    return len({x for p in pairs for x in p} - {1}) > 2
