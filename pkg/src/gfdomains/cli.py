"""Command line front end: ``gfdomains {generate,check,sweep,verify}``.

Exit status is 0 on success, 1 when a checked property or verification fails and
2 on usage errors (bad arguments, caps exceeded, unparseable input).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .analysis import PROPERTY_NAMES, full_report
from .cardinality import FLAGS_CAP, SIZE_CAP, census, census_csv, extremality_report
from .necklace import flags_to_domain, gf_necklace
from .never import KSubset, domain_of_scheme, fishburn_K, gf_scheme
from .orders import MAX_N, Domain, check_n, parse_order
from .verify import VERIFY_CAP, verify_n, verify_thm7_suite

log = logging.getLogger("gfdomains")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_domain(text: str) -> Domain:
    """Parse ``{"n": 4, "orders": [...]}`` JSON or one order per line (``#`` comments allowed)."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            orders = [parse_order(str(s)) for s in data["orders"]]
            return Domain.of(orders, n=data.get("n"))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad JSON domain: {exc}") from None
    orders = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v = parse_order(line)
        except ValueError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
        if orders and v.n != orders[0].n:
            raise UsageError(f"line {lineno}: order {line!r} has n={v.n}, expected n={orders[0].n}")
        orders.append(v)
    if not orders:
        raise UsageError("no orders on input")
    return Domain.of(orders)


def domain_json(d: Domain, **extra) -> dict:
    return {"n": d.n, **extra, "orders": d.as_strings()}


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_k(text: str | None, n: int) -> KSubset:
    if text is None:
        return fishburn_K(n)
    try:
        return KSubset.parse(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap(n: int, limit: int, lower: int = 1) -> None:
    try:
        check_n(n, limit=limit, lower=lower)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_generate(args: argparse.Namespace) -> int:
    _cap(args.n, MAX_N, lower=3)
    K = _parse_k(args.k, args.n)
    built = {}
    if args.method in ("scheme", "both"):
        built["scheme"] = domain_of_scheme(gf_scheme(args.n, K))
    if args.method in ("necklace", "both"):
        built["necklace"] = flags_to_domain(gf_necklace(args.n, K))
    if args.method == "both" and built["scheme"] != built["necklace"]:
        diff = sorted(map(str, built["scheme"].members ^ built["necklace"].members))
        log.error("scheme and necklace constructions disagree on %s", ", ".join(diff[:5]))
        return EXIT_FAIL
    d = next(iter(built.values()))
    if args.format == "json":
        text = json.dumps(domain_json(d, K=list(K.sorted), method=args.method)) + "\n"
    else:
        text = "".join(s + "\n" for s in d.as_strings())
    _write(text, args.out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.input and args.input != "-":
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        text = sys.stdin.read()
    d = parse_domain(text)
    _cap(d.n, MAX_N)
    props = PROPERTY_NAMES if not args.properties else tuple(p.strip() for p in args.properties.split(",") if p.strip())
    try:
        rep = full_report(d, props)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = json.dumps(rep.to_json()) + "\n"
    else:
        lines = [f"n={d.n} orders={len(d)}"]
        for name, ok in rep.flags.items():
            extra = ""
            if name == "spoc" and rep.spoc_arrangement is not None:
                extra = f"  arrangement {rep.spoc_arrangement}"
            elif name in rep.witnesses:
                extra = f"  {json.dumps(rep.witnesses[name])}"
            lines.append(f"{name}: {str(ok).lower()}{extra}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK if rep.all_true else EXIT_FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    _cap(args.n, SIZE_CAP if args.size_only else FLAGS_CAP, lower=3)
    rows = census(args.n, flags=not args.size_only, workers=args.parallelism)
    _write(census_csv(rows, extremality_report(rows)), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.thm7:
        try:
            results = verify_thm7_suite(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        _cap(args.n, VERIFY_CAP, lower=3)
        results = verify_n(args.n, workers=args.parallelism)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = json.dumps({"passed": ok, "checks": [r.to_json() for r in results]}, indent=1) + "\n"
    else:
        failed = [r for r in results if not r.passed]
        shown = results if args.verbose else failed
        lines = [r.line() for r in shown]
        lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gfdomains", description=__doc__.splitlines()[0])
    ap.add_argument("--log-level", default="WARNING")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output here instead of stdout")

    g = sub.add_parser("generate", help="build the GF-domain F_K")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", help="comma-separated members of K; '' is the empty set (default: even numbers)")
    g.add_argument("--method", choices=("scheme", "necklace", "both"), default="scheme")
    common(g, ("json", "text"))
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="report properties of a domain read from a file or stdin")
    c.add_argument("--in", dest="input", help="domain file; '-' or omitted reads stdin")
    c.add_argument("--properties", help=f"comma-separated subset of: {', '.join(PROPERTY_NAMES)}")
    common(c, ("json", "text"))
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sweep", help="census of |F_K| over every K, as CSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--size-only", action="store_true", help=f"skip property flags (allows n <= {SIZE_CAP})")
    s.add_argument("--parallelism", type=int, default=1)
    common(s, ("csv",))
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="certify the GF-domain properties for one n")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--thm7", action="store_true", help="check single-crossing domains instead (n = 4 or 5)")
    v.add_argument("--parallelism", type=int, default=1)
    v.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    common(v, ("text", "json"))
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(message)s")
    if getattr(args, "parallelism", 1) < 1:
        ap.error("--parallelism must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gfdomains: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
