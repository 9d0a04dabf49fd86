"""Sizes of GF-domains: the alternating-scheme formula and the census over all K."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .analysis import full_report
from .never import KSubset, all_k_subsets, domain_of_scheme, fishburn_K, gf_scheme
from .orders import check_n

__all__ = [
    "SIZE_CAP",
    "FLAGS_CAP",
    "CENSUS_FLAGS",
    "CSV_HEADER",
    "CensusRow",
    "ExtremalityReport",
    "fishburn_formula",
    "gf_domain",
    "census",
    "extremality_report",
    "census_csv",
]

SIZE_CAP = 8
FLAGS_CAP = 7
CENSUS_FLAGS = ("condorcet", "copious", "maximal", "maximal_width", "directly_connected", "spoc")
CSV_HEADER = ("n", "K", "size") + CENSUS_FLAGS


def fishburn_formula(n: int) -> int:
    """Size of the domain of the classical alternating scheme on n alternatives."""
    if n < 3:
        raise ValueError(f"the formula needs n >= 3, got n={n}")
    base = (n + 3) * 2 ** (n - 3)
    if n % 2 == 0:
        correction = (n - Fraction(3, 2)) * comb(n - 2, n // 2 - 1)
    else:
        correction = Fraction(n - 1, 2) * comb(n - 1, (n - 1) // 2)
    size = base - correction
    if size.denominator != 1:
        raise ArithmeticError(f"formula gave a non-integer {size} at n={n}")
    return int(size)


def gf_domain(n: int, K: KSubset):
    return domain_of_scheme(gf_scheme(n, K))


@dataclass(frozen=True)
class CensusRow:
    n: int
    K: KSubset
    size: int
    flags: dict[str, bool] | None = field(default=None, compare=False)

    def csv_fields(self) -> list[str]:
        cells = [str(self.n), str(self.K), str(self.size)]
        for name in CENSUS_FLAGS:
            cells.append("" if self.flags is None else str(self.flags[name]).lower())
        return cells


def _row(args: tuple[int, KSubset, bool]) -> CensusRow:
    n, K, with_flags = args
    d = gf_domain(n, K)
    flags = full_report(d, CENSUS_FLAGS).summary() if with_flags else None
    return CensusRow(n, K, len(d), flags)


def census(n: int, flags: bool = False, workers: int = 1) -> list[CensusRow]:
    """One row per K in binary-counter order; ``flags`` adds the property verdicts."""
    check_n(n, limit=FLAGS_CAP if flags else SIZE_CAP, lower=3)
    jobs = [(n, K, flags) for K in all_k_subsets(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_row, jobs))
    return [_row(j) for j in jobs]


@dataclass(frozen=True)
class ExtremalityReport:
    n: int
    min_size: int
    max_size: int
    argmin: tuple[KSubset, ...]
    argmax: tuple[KSubset, ...]
    fishburn_size: int
    fishburn_attains_max: bool
    extremes_size: int

    def lines(self) -> list[str]:
        fmt = lambda ks: " ".join("{" + ",".join(map(str, k.sorted)) + "}" for k in ks)
        return [
            f"min={self.min_size} at {fmt(self.argmin)}",
            f"max={self.max_size} at {fmt(self.argmax)}",
            f"alternating K size={self.fishburn_size} attains max: {str(self.fishburn_attains_max).lower()}",
            f"empty/full K size={self.extremes_size}",
        ]


def extremality_report(rows: list[CensusRow]) -> ExtremalityReport:
    """Smallest and largest |F_K| in a census, and whether the alternating K reaches the top.

    Evidence only: nothing here assumes the extremes are the empty, full or
    alternating K.
    """
    if not rows:
        raise ValueError("empty census")
    n = rows[0].n
    sizes = [r.size for r in rows]
    lo, hi = min(sizes), max(sizes)
    by_k = {r.K: r.size for r in rows}
    fk = by_k[fishburn_K(n)]
    return ExtremalityReport(
        n=n,
        min_size=lo,
        max_size=hi,
        argmin=tuple(r.K for r in rows if r.size == lo),
        argmax=tuple(r.K for r in rows if r.size == hi),
        fishburn_size=fk,
        fishburn_attains_max=fk == hi,
        extremes_size=by_k[KSubset(n)],
    )


def census_csv(rows: list[CensusRow], report: ExtremalityReport | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    if report is not None:
        for line in report.lines():
            buf.write(f"# {line}\n")
    return buf.getvalue()
