"""Command-line driver.

Subcommands:
  compute    chromatic function of one graph, plus graded multiplicities
  formula    the word-product expansion and its monomial projection
  verify     run the law suites over all graphs of a given size
  enumerate  list all Hessenberg functions of a given size
  bench      time the formula against the coloring oracle, per graph

Exit status: 0 on success, 1 when verification fails, 2 on bad input.
Output is deterministic for a given configuration (timings aside).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__, cache, kernel
from .affine import evaluate_formula, formula_term_count
from .chromatic import (
    SUITES,
    chromatic_qsym,
    euler_char,
    graded_multiplicities,
    verify_laws,
)
from .hessenberg import (
    Hessenberg,
    HessenbergError,
    RootIdeal,
    enumerate_hessenberg,
    hess_to_ideal,
    ideal_to_hess,
)
from .partitions import partitions, pad
from .symfunc import SymFunc
from .laurent import LaurentT

BENCH_COLUMNS = [
    "n",
    "h",
    "kernel",
    "formula_terms",
    "oracle_terms",
    "formula_seconds",
    "oracle_seconds",
]

ENUM_COLUMNS = ["n", "h", "ideal_size", "edge_count", "euler_char"]


class InputError(Exception):
    pass


def _graph_argument(args) -> Hessenberg:
    given = [x for x in (args.hess, args.dyck, args.ideal) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --hess, --dyck, --ideal")
    if args.hess is not None:
        return Hessenberg.parse(args.hess)
    if args.dyck is not None:
        try:
            areas = [int(tok) for tok in args.dyck.split(",") if tok.strip()]
        except ValueError as exc:
            raise InputError("cannot parse --dyck %r" % args.dyck) from exc
        return Hessenberg.from_area(areas)
    if args.n is None:
        raise InputError("--ideal needs --n to fix the size")
    return ideal_to_hess(RootIdeal.parse(args.ideal, args.n))


def _add_graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hess", help="Hessenberg values, e.g. 2,3,3")
    p.add_argument("--dyck", help="Dyck area sequence, e.g. 1,1,0")
    p.add_argument("--ideal", help="root ideal, e.g. {(1,3)}")
    p.add_argument("--n", type=int, help="size (required with --ideal)")


def cmd_compute(args) -> int:
    h = _graph_argument(args)
    cache_dir = cache.resolve_cache_dir(args.cache_dir)
    if cache_dir:
        cache.load_kostka(cache_dir)
    f = chromatic_qsym(h, args.basis)
    gm = graded_multiplicities(h)
    if args.output == "json":
        payload = {
            "version": "compute-v1",
            "h": list(h.values),
            "ideal": str(hess_to_ideal(h)),
            "value": f.to_json_dict(),
            "graded_multiplicities": {
                "shift": gm.shift,
                "entries": [
                    {"partition": list(lam), "coeff": c.pairs()}
                    for lam, c in gm.items()
                ],
            },
        }
        print(json.dumps(payload, indent=1))
    else:
        print(f.render())
        print("graded multiplicities (shift %d):" % gm.shift)
        for lam, c in gm.items():
            print("  [%s]: %s" % (",".join(str(p) for p in lam), c.format()))
    if cache_dir:
        cache.save_kostka(cache_dir)
    return 0


def cmd_formula(args) -> int:
    h = _graph_argument(args)
    result = evaluate_formula(h)
    n = h.n
    proj_items = sorted(result.projected.items())
    if args.output == "json":
        payload = result.decorated.to_json_dict()
        payload["h"] = list(h.values)
        payload["term_tuples"] = formula_term_count(h)
        payload["projection"] = [
            {"eps": list(eps), "count": c} for eps, c in proj_items
        ]
        print(json.dumps(payload, indent=1))
        return 0
    print("word tuples: %d" % formula_term_count(h))
    print("decorated sum; each line shows the exact delta exponent d")
    print("(q = e^-delta reads a term as q^-d, the alternate q = e^+delta as q^d):")
    for line in result.decorated.dump_lines():
        print("  " + line)
    print("projection by exponent vector:")
    for eps, c in proj_items:
        print("  %d  eps=%s" % (c, ",".join(str(e) for e in eps)))
    coeffs = {}
    for lam in partitions(n):
        c = result.projected.get(pad(lam, n), 0)
        if c:
            coeffs[lam] = LaurentT.const(c)
    print("as monomial symmetric function: %s" % SymFunc("m", n, coeffs).render())
    return 0


def cmd_verify(args) -> int:
    cache_dir = cache.resolve_cache_dir(args.cache_dir)
    if cache_dir:
        cache.load_kostka(cache_dir)
    report = verify_laws(args.n, suites=args.suite, workers=args.workers)
    payload = report.to_json_dict()
    if cache_dir:
        cache.save_kostka(cache_dir)
        cache.save_report(cache_dir, args.n, payload)
    failures = report.failures()
    findings = report.findings()
    if args.output == "json":
        print(json.dumps(payload, indent=1))
    elif args.output == "csv":
        writer = csv.DictWriter(
            sys.stdout,
            fieldnames=["n", "suite", "total", "passed", "failed", "findings"],
        )
        writer.writeheader()
        for row in report.summary_rows():
            writer.writerow(row)
    else:
        for row in report.summary_rows():
            print(
                "n=%d suite=%-15s total=%-4d passed=%-4d failed=%-4d findings=%d"
                % (
                    row["n"],
                    row["suite"],
                    row["total"],
                    row["passed"],
                    row["failed"],
                    row["findings"],
                )
            )
        for rec in failures:
            print(
                "FAIL %s h=%s lhs=%s rhs=%s %s"
                % (rec.suite, rec.h, rec.lhs, rec.rhs, rec.detail or "")
            )
    for rec in findings:
        print(
            "FINDING %s h=%s: %s" % (rec.suite, rec.h, rec.detail or rec.lhs),
            file=sys.stderr,
        )
    return 1 if failures else 0


def cmd_enumerate(args) -> int:
    rows = []
    for h in enumerate_hessenberg(args.n):
        rows.append(
            {
                "n": args.n,
                "h": str(h),
                "ideal_size": hess_to_ideal(h).size(),
                "edge_count": h.edge_count(),
                "euler_char": euler_char(h),
            }
        )
    if args.output == "json":
        print(json.dumps({"version": "enumerate-v1", "rows": rows}, indent=1))
    elif args.output == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=ENUM_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    else:
        for row in rows:
            print(
                "h=%-20s |ideal|=%-3d |E|=%-3d chi=%d"
                % (row["h"], row["ideal_size"], row["edge_count"], row["euler_char"])
            )
        print("total: %d" % len(rows))
    return 0


def _bench_rows(n: int, kernel_names: list[str]) -> list[dict]:
    rows = []
    for h in enumerate_hessenberg(n):
        t0 = time.perf_counter()
        evaluate_formula(h)
        formula_seconds = time.perf_counter() - t0
        for name in kernel_names:
            backend = kernel.get_backend(name)
            t0 = time.perf_counter()
            backend.coloring_table(h.values, n)
            oracle_seconds = time.perf_counter() - t0
            rows.append(
                {
                    "n": n,
                    "h": str(h),
                    "kernel": backend.BACKEND,
                    "formula_terms": formula_term_count(h),
                    "oracle_terms": n**n,
                    "formula_seconds": "%.6f" % formula_seconds,
                    "oracle_seconds": "%.6f" % oracle_seconds,
                }
            )
    return rows


def cmd_bench(args) -> int:
    if args.kernel == "both":
        names = kernel.available_backends()
    else:
        names = [args.kernel]
    try:
        rows = _bench_rows(args.n, names)
    except RuntimeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS)
    writer.writeheader()
    writer.writerows(rows)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print("wrote %s (%d rows)" % (args.out, len(rows)))
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csf",
        description="Exact chromatic (quasi)symmetric functions of unit "
        "interval graphs, by product formula and by coloring oracle.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="chromatic function of one graph")
    _add_graph_flags(p)
    p.add_argument("--basis", choices=["m", "s", "e"], default="s")
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.add_argument("--cache-dir", help="Kostka cache directory")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("formula", help="word-product expansion of one graph")
    _add_graph_flags(p)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run the law suites at one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--suite",
        default="all",
        help="'all' or comma-separated subset of: %s" % ",".join(SUITES),
    )
    p.add_argument("--output", choices=["text", "json", "csv"], default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", help="cache directory for Kostka and reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list Hessenberg functions of one size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="formula vs oracle timings, CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--kernel",
        choices=["auto", "compiled", "python", "both"],
        default="auto",
        help="which oracle backend(s) to time",
    )
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HessenbergError, InputError, ValueError) as exc:
        name = type(exc).__name__
        print("error: %s: %s" % (name, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
