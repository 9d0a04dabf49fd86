"""Property checkers for domains of linear orders.

Everything here is exhaustive and exact; run times are only reasonable for the
small ``n`` the rest of the package targets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from .never import CompleteNeverSet, infer_satisfied_conditions
from .orders import (
    Domain,
    LinearOrder,
    Triple,
    adjacent_orders,
    all_orders,
    check_n,
    identity,
    kendall_distance,
    restrict,
    restrict_domain,
    reverse,
    triples,
)

__all__ = [
    "PROPERTY_NAMES",
    "CircularArrangement",
    "PropertyReport",
    "condorcet_violation",
    "is_condorcet",
    "copiousness_violation",
    "is_copious",
    "addable_order",
    "is_maximal_condorcet",
    "has_maximal_width",
    "is_semi_connected",
    "geodesic_sources",
    "disconnected_pair",
    "is_directly_connected",
    "canonical_arrangements",
    "is_spoc_on",
    "is_spoc",
    "is_peak_pit",
    "full_report",
    "maximal_condorcet_domains",
    "relabeling_orbits",
]

PROPERTY_NAMES = (
    "condorcet",
    "copious",
    "maximal",
    "maximal_width",
    "semi_connected",
    "directly_connected",
    "spoc",
)

# (alternative, 1-based position) slots of the three-element restrictions
_Slots = frozenset[tuple[int, int]]


def _slots(r: tuple[int, int, int]) -> _Slots:
    return frozenset((x, i + 1) for i, x in enumerate(r))


def condorcet_violation(d: Domain) -> Triple | None:
    """First triple on which no never condition holds, if any."""
    for t in triples(d.n):
        if not infer_satisfied_conditions(d, t):
            return t
    return None


def is_condorcet(d: Domain) -> bool:
    return condorcet_violation(d) is None


def copiousness_violation(d: Domain) -> tuple[Triple, int] | None:
    for t in triples(d.n):
        size = len(restrict_domain(d, t))
        if size != 4:
            return t, size
    return None


def is_copious(d: Domain) -> bool:
    return copiousness_violation(d) is None


def addable_order(d: Domain) -> LinearOrder | None:
    """An order outside ``d`` whose addition keeps it Condorcet, or None if ``d`` is maximal.

    For each triple, the restriction patterns that would occupy every still-free
    (alternative, position) slot are precomputed; a candidate is rejected as soon
    as one of its restrictions is such a pattern.
    """
    if not is_condorcet(d):
        raise ValueError("maximality is only defined for Condorcet domains")
    ts = list(triples(d.n))
    killers = []
    for t in ts:
        occupied = frozenset().union(*(_slots(r) for r in restrict_domain(d, t)))
        free = {(x, i) for x in t for i in (1, 2, 3)} - occupied
        killers.append(frozenset(
            p for p in itertools.permutations(tuple(t)) if free <= _slots(p)
        ))
    for u in all_orders(d.n):
        if u in d:
            continue
        if not any(restrict(u, t) in kill for t, kill in zip(ts, killers)):
            return u
    return None


def is_maximal_condorcet(d: Domain) -> bool:
    return addable_order(d) is None


def has_maximal_width(d: Domain, any_pair: bool = False) -> bool:
    """Contains ``12..n`` and ``n..21``; with ``any_pair`` any order plus its reversal will do."""
    if any_pair:
        return any(reverse(v) in d for v in d)
    e = identity(d.n)
    return e in d and reverse(e) in d


def geodesic_sources(d: Domain, v: LinearOrder) -> frozenset[LinearOrder]:
    """Members of ``d`` joined to ``v`` by a geodesic that stays inside ``d``.

    Sweeps members by increasing distance to ``v``: an order qualifies when one
    of its permutohedron neighbours is a qualifying member one step closer.
    """
    dist = {w: kendall_distance(w, v) for w in d}
    good = {v}
    for w in sorted(d, key=dist.__getitem__):
        if w == v:
            continue
        k = dist[w]
        if any(x in good and dist[x] == k - 1 for x in adjacent_orders(w) if x in dist):
            good.add(w)
    return frozenset(good)


def is_semi_connected(d: Domain) -> bool:
    if not has_maximal_width(d):
        raise ValueError("semi-connectedness needs both 12..n and n..21 in the domain")
    e = identity(d.n)
    return e in geodesic_sources(d, reverse(e))


def disconnected_pair(d: Domain) -> tuple[LinearOrder, LinearOrder] | None:
    for v in d:
        sources = geodesic_sources(d, v)
        if len(sources) < len(d):
            u = next(w for w in d if w not in sources)
            return u, v
    return None


def is_directly_connected(d: Domain) -> bool:
    return disconnected_pair(d) is None


@dataclass(frozen=True)
class CircularArrangement:
    """Alternatives around a circle, stored with 1 first and the smaller neighbour of 1 second."""

    circle: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.circle)
        n = len(c)
        if n < 1 or sorted(c) != list(range(1, n + 1)):
            raise ValueError(f"{list(self.circle)} is not a permutation of 1..{n}")
        i = c.index(1)
        c = c[i:] + c[:i]
        if n > 2 and c[1] > c[-1]:
            c = (c[0],) + c[1:][::-1]
        object.__setattr__(self, "circle", c)

    @property
    def n(self) -> int:
        return len(self.circle)

    def __str__(self) -> str:
        return ",".join(map(str, self.circle))


def canonical_arrangements(n: int) -> Iterator[CircularArrangement]:
    """Each circle up to rotation and reflection once: (n-1)!/2 of them for n >= 3."""
    check_n(n)
    if n <= 2:
        yield CircularArrangement(tuple(range(1, n + 1)))
        return
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield CircularArrangement((1, *rest))


def _prefixes_are_arcs(ranking: tuple[int, ...], pos: dict[int, int], n: int) -> bool:
    # each new alternative must extend the current arc at one of its two ends
    left = right = pos[ranking[0]]
    for x in ranking[1:-1]:
        p = pos[x]
        if p == (left - 1) % n:
            left = p
        elif p == (right + 1) % n:
            right = p
        else:
            return False
    return True


def is_spoc_on(d: Domain, arr: CircularArrangement | Iterable[int]) -> bool:
    """Is every top segment of every order an arc of ``arr``?"""
    if not isinstance(arr, CircularArrangement):
        arr = CircularArrangement(tuple(arr))
    if arr.n != d.n:
        raise ValueError(f"arrangement has n={arr.n}, domain has n={d.n}")
    pos = {x: i for i, x in enumerate(arr.circle)}
    return all(_prefixes_are_arcs(v.ranking, pos, d.n) for v in d)


def is_spoc(d: Domain) -> CircularArrangement | None:
    """First canonical arrangement on which ``d`` is single-peaked on a circle, else None."""
    for arr in canonical_arrangements(d.n):
        if is_spoc_on(d, arr):
            return arr
    return None


def is_peak_pit(s: CompleteNeverSet) -> bool:
    if not isinstance(s, CompleteNeverSet):
        raise TypeError("is_peak_pit needs a CompleteNeverSet")
    return all(c.position in (1, 3) for c in s)


@dataclass
class PropertyReport:
    """Verdicts for a domain, with counterexamples for the failed ones."""

    n: int
    size: int
    flags: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    spoc_arrangement: CircularArrangement | None = None

    @property
    def all_true(self) -> bool:
        return all(self.flags.values())

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for name in PROPERTY_NAMES:
            if name not in self.flags:
                continue
            if name == "spoc":
                spoc: dict[str, Any] = {"found": self.flags["spoc"]}
                if self.spoc_arrangement is not None:
                    spoc["arrangement"] = list(self.spoc_arrangement.circle)
                out["spoc"] = spoc
            else:
                out[name] = self.flags[name]
        if self.witnesses:
            out["witnesses"] = self.witnesses
        return out

    def summary(self) -> dict[str, bool]:
        return dict(self.flags)


def full_report(d: Domain, properties: Iterable[str] | None = None) -> PropertyReport:
    wanted = tuple(PROPERTY_NAMES if properties is None else properties)
    unknown = set(wanted) - set(PROPERTY_NAMES)
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(sorted(unknown))}")
    rep = PropertyReport(n=d.n, size=len(d))
    flags, wit = rep.flags, rep.witnesses

    condorcet_bad = condorcet_violation(d) if {"condorcet", "maximal"} & set(wanted) else None
    width = has_maximal_width(d)

    for name in PROPERTY_NAMES:
        if name not in wanted:
            continue
        if name == "condorcet":
            flags[name] = condorcet_bad is None
            if condorcet_bad is not None:
                wit[name] = {"triple": list(condorcet_bad),
                             "restriction": sorted("".join(map(str, r)) for r in restrict_domain(d, condorcet_bad))}
        elif name == "copious":
            bad = copiousness_violation(d)
            flags[name] = bad is None
            if bad is not None:
                wit[name] = {"triple": list(bad[0]), "restriction_size": bad[1]}
        elif name == "maximal":
            if condorcet_bad is not None:
                flags[name] = False
                wit[name] = {"reason": "not a Condorcet domain"}
            else:
                u = addable_order(d)
                flags[name] = u is None
                if u is not None:
                    wit[name] = {"addable_order": str(u)}
        elif name == "maximal_width":
            flags[name] = width
        elif name == "semi_connected":
            flags[name] = width and is_semi_connected(d)
            if not flags[name]:
                wit[name] = {"reason": "12..n or n..21 missing" if not width else "no geodesic from 12..n to n..21"}
        elif name == "directly_connected":
            pair = disconnected_pair(d)
            flags[name] = pair is None
            if pair is not None:
                wit[name] = {"from": str(pair[0]), "to": str(pair[1])}
        elif name == "spoc":
            arr = is_spoc(d)
            flags[name] = arr is not None
            rep.spoc_arrangement = arr
            if arr is None:
                count = 1 if d.n <= 2 else math.factorial(d.n - 1) // 2
                wit[name] = {"arrangements_exhausted": count}
    return rep


def maximal_condorcet_domains(n: int) -> list[Domain]:
    """Every maximal Condorcet domain on ``1..n``, by brute force over all subsets of orders."""
    check_n(n, limit=3)
    universe = list(all_orders(n))
    condorcet = []
    for mask in range(1 << len(universe)):
        d = Domain(n, tuple(v for i, v in enumerate(universe) if mask >> i & 1))
        if is_condorcet(d):
            condorcet.append(d)
    sets = [d.members for d in condorcet]
    return [d for d, s in zip(condorcet, sets) if not any(s < other for other in sets)]


def _relabel(d: Domain, sigma: tuple[int, ...]) -> Domain:
    return Domain(d.n, tuple(LinearOrder(tuple(sigma[x - 1] for x in v)) for v in d))


def relabeling_orbits(domains: Iterable[Domain]) -> list[list[Domain]]:
    """Group domains that differ only by a renaming of the alternatives."""
    orbits: dict[tuple, list[Domain]] = {}
    for d in domains:
        key = min(tuple(_relabel(d, s).orders) for s in itertools.permutations(range(1, d.n + 1)))
        orbits.setdefault(key, []).append(d)
    return list(orbits.values())
