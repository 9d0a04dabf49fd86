"""Necklaces of black and white beads and the domains their w-convex flags generate.

A bead set is *w-convex* when it is a circular arc, is not a lone black bead,
and skips no white label lying (as an integer) between two of its labels.
Growing a w-convex set one bead at a time up to the full necklace reads off a
linear order, top first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .never import KSubset
from .orders import Domain, LinearOrder, all_orders, check_n

__all__ = [
    "Necklace",
    "gf_necklace",
    "is_arc",
    "is_w_convex",
    "enumerate_w_convex",
    "iter_flags",
    "flags_to_domain",
    "classical_single_peaked",
]


@dataclass(frozen=True)
class Necklace:
    """Beads ``circle`` read anticlockwise; labels in ``black`` are black, the rest white."""

    circle: tuple[int, ...]
    black: frozenset[int] = frozenset()

    def __post_init__(self):
        circle = tuple(int(x) for x in self.circle)
        n = len(circle)
        if n < 1 or sorted(circle) != list(range(1, n + 1)):
            raise ValueError(f"necklace circle {list(self.circle)} is not a permutation of 1..{n}")
        black = frozenset(int(x) for x in self.black)
        if not black <= set(circle):
            raise ValueError(f"black beads {sorted(black - set(circle))} are not on the circle")
        object.__setattr__(self, "circle", circle)
        object.__setattr__(self, "black", black)

    @property
    def n(self) -> int:
        return len(self.circle)

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.circle)}

    @property
    def white(self) -> frozenset[int]:
        return frozenset(self.circle) - self.black

    def color(self, bead: int) -> str:
        return "black" if bead in self.black else "white"

    @property
    def colors(self) -> dict[int, str]:
        return {x: self.color(x) for x in self.circle}

    def __str__(self) -> str:
        return ",".join(f"{x}{'b' if x in self.black else 'w'}" for x in self.circle)

    @classmethod
    def parse(cls, text: str) -> Necklace:
        """Read ``"1w,2w,4w,3b"`` or the JSON form ``{"circle": [...], "black": [...]}``."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(json.loads(text))
        circle, black = [], []
        for item in text.split(","):
            item = item.strip()
            if len(item) < 2 or item[-1] not in "wb" or not item[:-1].isdigit():
                raise ValueError(f"bad bead {item!r}; expected a label followed by 'w' or 'b'")
            circle.append(int(item[:-1]))
            if item[-1] == "b":
                black.append(circle[-1])
        return cls(tuple(circle), frozenset(black))

    def to_json(self) -> dict:
        return {"circle": list(self.circle), "black": sorted(self.black)}

    @classmethod
    def from_json(cls, data: dict) -> Necklace:
        return cls(tuple(data["circle"]), frozenset(data.get("black", ())))


def gf_necklace(n: int, K: KSubset | Iterable[int]) -> Necklace:
    """Circle ``1, k_1..k_s, n, l_t..l_1``: ends and K white, the other middle labels black."""
    check_n(n, lower=3)
    if not isinstance(K, KSubset):
        K = KSubset(n, frozenset(K))
    ks = K.sorted
    ls = K.complement().sorted
    circle = (1, *ks, n, *reversed(ls))
    return Necklace(circle, frozenset(ls))


def is_arc(s: Necklace, x: Iterable[int]) -> bool:
    """True iff ``x`` occupies contiguous positions on the circle (empty and full sets count)."""
    x = set(x)
    n = s.n
    if not x or len(x) == n:
        return True
    pos = {s.position[b] for b in x}
    # an arc has exactly one member whose anticlockwise predecessor is outside it
    starts = sum(1 for p in pos if (p - 1) % n not in pos)
    return starts == 1


def is_w_convex(s: Necklace, x: Iterable[int]) -> bool:
    x = frozenset(x)
    if not x:
        raise ValueError("w-convexity is only defined for nonempty bead sets")
    if not x <= set(s.circle):
        raise ValueError(f"beads {sorted(x - set(s.circle))} are not on the necklace")
    if not is_arc(s, x):
        return False
    if len(x) == 1 and next(iter(x)) in s.black:
        return False
    # the middle label of any i < j < k with i, k inside must not be a missing white bead
    lo, hi = min(x), max(x)
    return not any(j not in x and j not in s.black for j in range(lo + 1, hi))


def _arcs(s: Necklace) -> Iterator[frozenset[int]]:
    n = s.n
    for length in range(1, n):
        for start in range(n):
            yield frozenset(s.circle[(start + i) % n] for i in range(length))
    yield frozenset(s.circle)


def enumerate_w_convex(s: Necklace) -> frozenset[frozenset[int]]:
    """All nonempty w-convex bead sets."""
    return frozenset(x for x in _arcs(s) if is_w_convex(s, x))


def iter_flags(s: Necklace) -> Iterator[tuple[int, ...]]:
    """Depth-first over flags of w-convex sets, yielding the order each one encodes."""
    family = enumerate_w_convex(s)
    everything = frozenset(s.circle)

    def extend(current: frozenset[int], prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if current == everything:
            yield tuple(prefix)
            return
        for y in sorted(everything - current):
            nxt = current | {y}
            if nxt in family:
                prefix.append(y)
                yield from extend(nxt, prefix)
                prefix.pop()

    for bead in sorted(everything):
        if frozenset((bead,)) in family:
            yield from extend(frozenset((bead,)), [bead])


def flags_to_domain(s: Necklace) -> Domain:
    return Domain(s.n, tuple(LinearOrder(r) for r in iter_flags(s)))


def classical_single_peaked(n: int) -> Domain:
    """Orders whose every top segment is an integer interval, found by filtering all n! orders."""
    keep = []
    for v in all_orders(n):
        lo = hi = v.ranking[0]
        for x in v.ranking[1:]:
            if x == lo - 1:
                lo = x
            elif x == hi + 1:
                hi = x
            else:
                break
        else:
            keep.append(v)
    return Domain(n, tuple(keep))
