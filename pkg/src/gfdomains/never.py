"""Never conditions, complete never sets and the generalised alternating scheme."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np

from .orders import Domain, LinearOrder, Triple, check_n, restrict, restrict_domain, triples

__all__ = [
    "NeverCondition",
    "CompleteNeverSet",
    "KSubset",
    "parse_condition",
    "parse_scheme",
    "format_scheme",
    "gf_scheme",
    "fishburn_K",
    "all_k_subsets",
    "satisfies",
    "domain_of_scheme",
    "infer_satisfied_conditions",
    "permutation_table",
]

_CONDITION_RE = re.compile(r"^\s*(\d+)\s*N\s*\{\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\}\s*([123])\s*$")


@dataclass(frozen=True, order=True)
class NeverCondition:
    """``restricted`` never occupies ``position`` (1 = top) within ``triple``."""

    triple: Triple
    restricted: int
    position: int

    def __post_init__(self):
        if self.restricted not in self.triple:
            raise ValueError(f"{self.restricted} is not in triple {self.triple}")
        if self.position not in (1, 2, 3):
            raise ValueError(f"position must be 1, 2 or 3, got {self.position}")

    def __str__(self) -> str:
        t = self.triple
        return f"{self.restricted}N{{{t.a},{t.b},{t.c}}}{self.position}"


def parse_condition(text: str) -> NeverCondition:
    m = _CONDITION_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse never condition {text!r}")
    x, a, b, c, i = map(int, m.groups())
    return NeverCondition(Triple.of(a, b, c), x, i)


@dataclass(frozen=True)
class CompleteNeverSet:
    """Exactly one never condition for every triple of ``1..n``."""

    n: int
    conditions: tuple[NeverCondition, ...]

    def __post_init__(self):
        check_n(self.n, lower=3)
        by_triple: dict[Triple, NeverCondition] = {}
        for c in self.conditions:
            if c.triple.c > self.n:
                raise ValueError(f"condition {c} out of range for n={self.n}")
            if c.triple in by_triple:
                raise ValueError(f"two conditions for triple {c.triple}: {by_triple[c.triple]} and {c}")
            by_triple[c.triple] = c
        missing = [t for t in triples(self.n) if t not in by_triple]
        if missing:
            raise ValueError(f"incomplete never set: no condition for {', '.join(map(str, missing[:3]))}"
                             + (" ..." if len(missing) > 3 else ""))
        object.__setattr__(self, "conditions", tuple(sorted(self.conditions)))

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Triple, NeverCondition]) -> CompleteNeverSet:
        for t, c in mapping.items():
            if c.triple != t:
                raise ValueError(f"condition {c} filed under triple {t}")
        return cls(n, tuple(mapping.values()))

    def as_mapping(self) -> dict[Triple, NeverCondition]:
        return {c.triple: c for c in self.conditions}

    def __getitem__(self, t: Triple) -> NeverCondition:
        for c in self.conditions:
            if c.triple == t:
                return c
        raise KeyError(t)

    def __iter__(self) -> Iterator[NeverCondition]:
        return iter(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)


def parse_scheme(text: str, n: int | None = None) -> CompleteNeverSet:
    """Read newline-separated conditions such as ``2N{1,2,3}3``; ``#`` starts a comment."""
    conds = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            conds.append(parse_condition(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        n = max((c.triple.c for c in conds), default=0)
    return CompleteNeverSet(n, tuple(conds))


def format_scheme(s: CompleteNeverSet) -> str:
    return "\n".join(str(c) for c in s) + "\n"


@dataclass(frozen=True)
class KSubset:
    """A subset of ``{2, ..., n-1}``; its members are the white middle beads."""

    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        check_n(self.n, lower=3)
        members = frozenset(int(x) for x in self.members)
        bad = sorted(x for x in members if not 2 <= x <= self.n - 1)
        if bad:
            raise ValueError(f"K members {bad} outside [2, {self.n - 1}]")
        object.__setattr__(self, "members", members)

    @classmethod
    def parse(cls, text: str, n: int) -> KSubset:
        """Comma- or dash-separated members; ``""`` and ``"-"`` both mean the empty set."""
        text = text.strip()
        if text in ("", "-"):
            return cls(n)
        try:
            items = [int(s) for s in re.split(r"[,\-\s]+", text) if s]
        except ValueError:
            raise ValueError(f"cannot parse K from {text!r}") from None
        return cls(n, frozenset(items))

    @property
    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def mask(self) -> int:
        """Binary-counter index: bit ``j - 2`` is set iff ``j`` is in K."""
        return sum(1 << (j - 2) for j in self.members)

    def complement(self) -> KSubset:
        return KSubset(self.n, frozenset(range(2, self.n)) - self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __str__(self) -> str:
        return "-".join(map(str, self.sorted)) or "-"


def all_k_subsets(n: int) -> list[KSubset]:
    """Every K for this n, in binary-counter order."""
    check_n(n, lower=3)
    middle = range(2, n)
    return [
        KSubset(n, frozenset(j for j in middle if mask >> (j - 2) & 1))
        for mask in range(1 << (n - 2))
    ]


def gf_scheme(n: int, K: KSubset | Iterable[int]) -> CompleteNeverSet:
    """For i < j < k: j never last if j is in K, otherwise j never first."""
    check_n(n, lower=3)
    if not isinstance(K, KSubset):
        K = KSubset(n, frozenset(K))
    elif K.n != n:
        raise ValueError(f"K was built for n={K.n}, not n={n}")
    conds = tuple(
        NeverCondition(t, t.b, 3 if t.b in K else 1)
        for t in triples(n)
    )
    return CompleteNeverSet(n, conds)


def fishburn_K(n: int) -> KSubset:
    check_n(n, lower=3)
    return KSubset(n, frozenset(range(2, n, 2)))


def satisfies(v: LinearOrder, c: NeverCondition) -> bool:
    return restrict(v, c.triple)[c.position - 1] != c.restricted


@lru_cache(maxsize=4)
def permutation_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All n! rankings (lexicographic rows) and the matching 0-based position table."""
    check_n(n)
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)
    positions = np.argsort(perms, axis=1).astype(np.int8)
    perms.setflags(write=False)
    positions.setflags(write=False)
    return perms, positions


def domain_of_scheme(s: CompleteNeverSet) -> Domain:
    """Every order of ``1..n`` that satisfies all conditions of ``s``.

    Filters the full n! table; positions are column-indexed by ``alternative - 1``.
    """
    perms, pos = permutation_table(s.n)
    keep = np.ones(len(perms), dtype=bool)
    for c in s:
        x = c.restricted - 1
        o1, o2 = (y - 1 for y in c.triple if y != c.restricted)
        px = pos[:, x]
        above = (pos[:, o1] < px).astype(np.int8) + (pos[:, o2] < px)
        keep &= above != c.position - 1
    return Domain(s.n, tuple(LinearOrder(tuple(int(x) for x in row)) for row in perms[keep]))


def infer_satisfied_conditions(d: Domain, t: Triple) -> frozenset[NeverCondition]:
    """Every never condition on ``t`` that all orders of ``d`` satisfy."""
    occupied = {(x, i + 1) for r in restrict_domain(d, t) for i, x in enumerate(r)}
    return frozenset(
        NeverCondition(t, x, i)
        for x in t
        for i in (1, 2, 3)
        if (x, i) not in occupied
    )
