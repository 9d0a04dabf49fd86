"""Batch certification of GF-domain properties, used by ``gfdomains verify``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from .analysis import (
    addable_order,
    copiousness_violation,
    disconnected_pair,
    has_maximal_width,
    is_peak_pit,
    is_spoc,
    is_spoc_on,
)
from .cardinality import fishburn_formula
from .necklace import classical_single_peaked, flags_to_domain, gf_necklace
from .never import KSubset, all_k_subsets, domain_of_scheme, fishburn_K, gf_scheme
from .orders import check_n
from .single_crossing import MAX_CHAIN_N, enumerate_maximal_chains, id2_obstruction, thm7_counterexamples

__all__ = ["VERIFY_CAP", "CheckResult", "check_k", "verify_n", "verify_thm7_suite"]

VERIFY_CAP = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        if not self.passed and self.witness is not None:
            tail += f"  witness={self.witness}"
        return f"{status}  {self.name}{tail}"

    def to_json(self) -> dict[str, Any]:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def check_k(args: tuple[int, KSubset]) -> list[CheckResult]:
    """Every per-K claim for one GF-domain."""
    n, K = args
    tag = f"n={n} K={{{','.join(map(str, K.sorted))}}}"
    scheme = gf_scheme(n, K)
    by_scheme = domain_of_scheme(scheme)
    necklace = gf_necklace(n, K)
    by_necklace = flags_to_domain(necklace)
    out = []

    same = by_scheme == by_necklace
    diff = sorted(map(str, by_scheme.members ^ by_necklace.members))[:3]
    out.append(CheckResult(f"necklace = scheme [{tag}]", same, f"|F_K|={len(by_scheme)}", diff or None))

    bad = copiousness_violation(by_scheme)
    out.append(CheckResult(f"copious [{tag}]", bad is None,
                           witness=None if bad is None else f"triple {bad[0]} has {bad[1]} orders"))
    u = addable_order(by_scheme)
    out.append(CheckResult(f"maximal [{tag}]", u is None, witness=None if u is None else f"can add {u}"))
    out.append(CheckResult(f"peak-pit, maximal width [{tag}]",
                           is_peak_pit(scheme) and has_maximal_width(by_scheme)))
    pair = disconnected_pair(by_scheme)
    out.append(CheckResult(f"directly connected [{tag}]", pair is None,
                           witness=None if pair is None else f"{pair[0]} -> {pair[1]}"))
    out.append(CheckResult(f"SPOC on necklace circle [{tag}]", is_spoc_on(by_scheme, necklace.circle)))
    arr = is_spoc(by_scheme)
    out.append(CheckResult(f"SPOC by search [{tag}]", arr is not None,
                           "" if arr is None else f"arrangement {arr}"))
    dual = domain_of_scheme(gf_scheme(n, K.complement()))
    out.append(CheckResult(f"reversal duality [{tag}]", by_scheme.reversed() == dual))
    return out


def verify_n(n: int, workers: int = 1) -> list[CheckResult]:
    check_n(n, limit=VERIFY_CAP, lower=3)
    jobs = [(n, K) for K in all_k_subsets(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_k = list(pool.map(check_k, jobs))
    else:
        per_k = [check_k(j) for j in jobs]
    results = [r for rs in per_k for r in rs]

    enumerated = len(domain_of_scheme(gf_scheme(n, fishburn_K(n))))
    formula = fishburn_formula(n)
    results.append(CheckResult(f"alternating scheme size formula [n={n}]", formula == enumerated,
                               f"formula={formula} enumerated={enumerated}"))
    full = KSubset(n, frozenset(range(2, n)))
    sizes = {len(domain_of_scheme(gf_scheme(n, k))) for k in (KSubset(n), full)}
    results.append(CheckResult(f"|F_K| = 2^(n-1) for empty and full K [n={n}]", sizes == {2 ** (n - 1)},
                               f"sizes={sorted(sizes)}"))
    sp = flags_to_domain(gf_necklace(n, full)) == classical_single_peaked(n)
    results.append(CheckResult(f"full K gives classical single-peaked [n={n}]", sp))
    return results


def verify_thm7_suite(n: int) -> list[CheckResult]:
    if not 4 <= n <= MAX_CHAIN_N:
        raise ValueError(f"single-crossing verification covers 4 <= n <= {MAX_CHAIN_N}, got n={n}")
    chains = enumerate_maximal_chains(n)
    bad = thm7_counterexamples(n)
    return [
        CheckResult(f"maximal single-crossing domains are not SPOC [n={n}]", not bad,
                    f"{len(chains)} chains checked", [str(sw) for sw in bad[:3]] or None),
        CheckResult(f"relay chain pair obstruction [n={n}]", id2_obstruction(n)),
    ]
