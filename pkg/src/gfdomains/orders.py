"""Linear orders over the alternatives ``1..n`` and the permutohedron they live on.

Orders are stored best-first, so ``LinearOrder((2, 4, 1, 3))`` ranks 2 on top
and 3 at the bottom.  A :class:`Domain` is a canonically sorted, duplicate-free
collection of orders sharing the same ``n``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_N",
    "LinearOrder",
    "Domain",
    "Triple",
    "check_n",
    "make_order",
    "parse_order",
    "format_order",
    "identity",
    "all_orders",
    "triples",
    "restrict",
    "restrict_domain",
    "reverse",
    "kendall_distance",
    "are_adjacent",
    "adjacent_orders",
    "geodesic_connected",
    "prefix_set",
    "upper_contour",
]

# factorial enumeration stays tractable below this
MAX_N = 10


def check_n(n: int, limit: int | None = None, lower: int = 1) -> int:
    limit = MAX_N if limit is None else limit
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < lower:
        raise ValueError(f"n={n} is below the minimum of {lower}")
    if n > limit:
        raise ValueError(f"n={n} exceeds the limit of {limit}")
    return n


@dataclass(frozen=True, order=True)
class LinearOrder:
    """A ranking of ``1..n``, best first."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        ranking = tuple(int(x) for x in self.ranking)
        n = len(ranking)
        if n < 1:
            raise ValueError("a linear order needs at least one alternative")
        if sorted(ranking) != list(range(1, n + 1)):
            raise ValueError(f"{list(self.ranking)} is not a permutation of 1..{n}")
        object.__setattr__(self, "ranking", ranking)

    @property
    def n(self) -> int:
        return len(self.ranking)

    @cached_property
    def positions(self) -> dict[int, int]:
        """0-based position of every alternative."""
        return {x: i for i, x in enumerate(self.ranking)}

    def rank(self, a: int) -> int:
        """1-based rank of ``a`` (1 is the top)."""
        try:
            return self.positions[a] + 1
        except KeyError:
            raise ValueError(f"alternative {a} not in 1..{self.n}") from None

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranking)

    def __len__(self) -> int:
        return len(self.ranking)

    def __str__(self) -> str:
        return format_order(self)

    def __repr__(self) -> str:
        return f"LinearOrder({format_order(self)!r})"


@dataclass(frozen=True, order=True)
class Triple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (1 <= self.a < self.b < self.c):
            raise ValueError(f"triple needs 1 <= a < b < c, got {self.a}, {self.b}, {self.c}")

    @classmethod
    def of(cls, *xs: int) -> Triple:
        """Build from any three distinct alternatives, in any order."""
        if len(xs) == 1:
            xs = tuple(xs[0])
        if len(set(xs)) != 3:
            raise ValueError(f"need three distinct alternatives, got {xs}")
        return cls(*sorted(xs))

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def __contains__(self, x: object) -> bool:
        return x in (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"{{{self.a},{self.b},{self.c}}}"


@dataclass(frozen=True)
class Domain:
    """A set of linear orders on ``1..n`` kept in lexicographic order."""

    n: int
    orders: tuple[LinearOrder, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        orders = []
        for v in self.orders:
            if not isinstance(v, LinearOrder):
                v = make_order(v)
            if v.n != self.n:
                raise ValueError(f"order {v} has n={v.n}, domain has n={self.n}")
            orders.append(v)
        object.__setattr__(self, "orders", tuple(sorted(set(orders))))

    @classmethod
    def of(cls, orders: Iterable[LinearOrder | Sequence[int] | str], n: int | None = None) -> Domain:
        items = [v if isinstance(v, LinearOrder) else make_order(v) for v in orders]
        if n is None:
            if not items:
                raise ValueError("cannot infer n for an empty domain")
            n = items[0].n
        return cls(n, tuple(items))

    @cached_property
    def members(self) -> frozenset[LinearOrder]:
        return frozenset(self.orders)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[LinearOrder]:
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)

    def union(self, other: Iterable[LinearOrder]) -> Domain:
        return Domain(self.n, self.orders + tuple(other))

    def reversed(self) -> Domain:
        """Every order turned upside down."""
        return Domain(self.n, tuple(reverse(v) for v in self.orders))

    def as_strings(self) -> list[str]:
        return [format_order(v) for v in self.orders]

    def __str__(self) -> str:
        return "{" + ", ".join(self.as_strings()) + "}"


def make_order(seq: Sequence[int] | str | LinearOrder) -> LinearOrder:
    if isinstance(seq, LinearOrder):
        return seq
    if isinstance(seq, str):
        return parse_order(seq)
    return LinearOrder(tuple(seq))


def parse_order(text: str) -> LinearOrder:
    """Read ``"2413"`` or ``"2,4,1,3"``; commas are required once n reaches 10."""
    text = text.strip()
    if not text:
        raise ValueError("empty order")
    if "," in text:
        items = [s.strip() for s in text.split(",")]
    elif text.isdigit():
        items = list(text)
    else:
        items = text.split()
    try:
        return LinearOrder(tuple(int(s) for s in items))
    except ValueError as exc:
        raise ValueError(f"cannot parse order {text!r}: {exc}") from None


def format_order(v: LinearOrder) -> str:
    if v.n <= 9:
        return "".join(map(str, v.ranking))
    return ",".join(map(str, v.ranking))


def identity(n: int) -> LinearOrder:
    return LinearOrder(tuple(range(1, n + 1)))


def all_orders(n: int) -> Iterator[LinearOrder]:
    """All n! orders in lexicographic order."""
    check_n(n)
    for p in itertools.permutations(range(1, n + 1)):
        yield LinearOrder(p)


def triples(n: int) -> Iterator[Triple]:
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        yield Triple(a, b, c)


def _check_triple(n: int, t: Triple) -> None:
    if t.c > n:
        raise ValueError(f"triple {t} out of range for n={n}")


def restrict(v: LinearOrder, t: Triple) -> tuple[int, int, int]:
    """The alternatives of ``t`` in the relative order ``v`` gives them."""
    _check_triple(v.n, t)
    pos = v.positions
    return tuple(sorted(t, key=pos.__getitem__))


def restrict_domain(d: Domain, t: Triple) -> frozenset[tuple[int, int, int]]:
    _check_triple(d.n, t)
    return frozenset(restrict(v, t) for v in d)


def reverse(v: LinearOrder) -> LinearOrder:
    return LinearOrder(v.ranking[::-1])


def _same_n(u: LinearOrder, v: LinearOrder) -> None:
    if u.n != v.n:
        raise ValueError(f"orders on different alternative sets: n={u.n} vs n={v.n}")


def kendall_distance(u: LinearOrder, v: LinearOrder) -> int:
    """Number of pairs ranked oppositely by ``u`` and ``v``."""
    _same_n(u, v)
    pos = v.positions
    seq = [pos[x] for x in u.ranking]
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])


def are_adjacent(u: LinearOrder, v: LinearOrder) -> bool:
    """True iff one swap of neighbouring entries turns ``u`` into ``v``."""
    _same_n(u, v)
    diff = [i for i in range(u.n) if u.ranking[i] != v.ranking[i]]
    return (
        len(diff) == 2
        and diff[1] == diff[0] + 1
        and u.ranking[diff[0]] == v.ranking[diff[1]]
        and u.ranking[diff[1]] == v.ranking[diff[0]]
    )


def adjacent_orders(v: LinearOrder) -> Iterator[LinearOrder]:
    r = list(v.ranking)
    for i in range(v.n - 1):
        r[i], r[i + 1] = r[i + 1], r[i]
        yield LinearOrder(tuple(r))
        r[i], r[i + 1] = r[i + 1], r[i]


def geodesic_connected(d: Domain, u: LinearOrder, v: LinearOrder) -> bool:
    """Is there a shortest permutohedron path from ``u`` to ``v`` inside ``d``?

    Breadth-first over members of ``d``; a step is only taken when it brings
    the walk exactly one unit of Kendall distance closer to ``v``.
    """
    if u not in d or v not in d:
        raise ValueError("both endpoints must belong to the domain")
    if u == v:
        return True
    target = kendall_distance(u, v)
    seen = {u}
    queue = deque([(u, target)])
    while queue:
        w, dist = queue.popleft()
        for x in adjacent_orders(w):
            if x in seen or x not in d:
                continue
            if kendall_distance(x, v) != dist - 1:
                continue
            if x == v:
                return True
            seen.add(x)
            queue.append((x, dist - 1))
    return False


def prefix_set(v: LinearOrder, k: int) -> frozenset[int]:
    """The top ``k`` alternatives of ``v``."""
    if not 0 <= k <= v.n:
        raise ValueError(f"k={k} out of range 0..{v.n}")
    return frozenset(v.ranking[:k])


def upper_contour(v: LinearOrder, a: int) -> frozenset[int]:
    """Alternatives strictly preferred to ``a``."""
    return prefix_set(v, v.rank(a) - 1)
