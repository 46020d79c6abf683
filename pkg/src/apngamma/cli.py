"""Command-line driver: analyze, verify, gamma, spread, conjecture3.

Exit codes: 0 success, 2 input or pipeline error (including violated proven
properties), 3 conjecture counterexample found. Reports are byte-identical
across runs and worker counts; timing data only appears with --timings.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import harness, spread
from .catalog import (
    FunctionSpecRecord,
    build_vecfn,
    gold_catalog,
    parse_tt,
    write_boolfn_tt,
    write_report,
)
from .gamma import gamma, gamma_decompose
from .gf2n import DEFAULT_POLYS


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def _add_selectors(p: argparse.ArgumentParser, with_range: bool) -> None:
    p.add_argument("--gold", nargs=2, type=int, metavar=("N", "K"),
                   help="Gold function x^(2^K+1) over GF(2^N)")
    if with_range:
        p.add_argument("--gold-range", nargs=2, type=int, metavar=("A", "B"),
                       help="all Gold functions with A <= n <= B")
    p.add_argument("--tt", metavar="PATH", help="truth-table file to import")
    p.add_argument("--univariate", nargs=2, metavar=("N", "TERMS"),
                   help="univariate polynomial over GF(2^N); TERMS like '3:1,1:5' "
                        "meaning x^3 + 5*x")
    p.add_argument("--poly", metavar="MASK",
                   help="field modulus override as a mask incl. leading bit, e.g. 0xb")


def _parse_poly(text: str | None) -> int | None:
    if text is None:
        return None
    try:
        return int(text, 0)
    except ValueError:
        raise SystemExit(f"error: malformed modulus {text!r}")


def _records_from_args(args, allow_many: bool) -> list[FunctionSpecRecord]:
    poly = _parse_poly(getattr(args, "poly", None))
    records: list[FunctionSpecRecord] = []
    if getattr(args, "gold_range", None):
        if poly is not None:
            raise SystemExit("error: --poly cannot apply across --gold-range")
        a, b = args.gold_range
        records.extend(gold_catalog(a, b))
    if args.gold:
        n, k = args.gold
        records.append(FunctionSpecRecord(
            id=f"gold_n{n}_k{k}", kind="gold", n=n, k=k,
            poly=poly if poly is not None else DEFAULT_POLYS.get(n),
        ))
    if args.tt:
        with open(args.tt, "r", encoding="ascii") as fh:
            F = parse_tt(fh.read())
        stem = os.path.splitext(os.path.basename(args.tt))[0]
        records.append(FunctionSpecRecord(
            id=f"tt_{stem}", kind="truth-table", n=F.n, path=args.tt, poly=poly,
        ))
    if args.univariate:
        n_text, terms = args.univariate
        n = int(n_text)
        pairs = []
        for term in terms.split(","):
            e_text, _, c_text = term.partition(":")
            if not c_text:
                raise SystemExit(f"error: malformed term {term!r}, expected e:c")
            pairs.append((int(e_text), int(c_text, 0)))
        ident = "_".join(f"{e}c{c}" for e, c in pairs)
        records.append(FunctionSpecRecord(
            id=f"uni_n{n}_{ident}", kind="univariate", n=n,
            coeffs=tuple(pairs), poly=poly,
        ))
    if not records:
        raise SystemExit("error: no function selected "
                         "(use --gold, --gold-range, --tt or --univariate)")
    if not allow_many and len(records) > 1:
        raise SystemExit("error: this command takes exactly one function")
    return records


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    records = _records_from_args(args, allow_many=True)
    functions = []
    for rec in records:
        try:
            functions.append(harness.analyze_record(rec, timings=args.timings))
        except Exception as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    _emit(write_report({"schema": 1, "functions": functions}), args.json)
    return 0


def _cmd_verify(args) -> int:
    records = _records_from_args(args, allow_many=True)
    functions = harness.verify_many(records, workers=args.threads,
                                    timings=args.timings)
    for doc in functions:
        if "error" in doc:
            print(f"{doc['id']}: ERROR {doc['error']}")
            continue
        checks = " ".join(f"{k}={v}" for k, v in doc["checks"].items())
        conjs = " ".join(f"{k}={v}" for k, v in doc["conjectures"].items())
        print(f"{doc['id']}: {checks} | {conjs}")
    code = harness.report_exit_code(functions)
    errors = sum(1 for d in functions if "error" in d)
    theorem_fail = sum(
        1 for d in functions
        for v in d.get("checks", {}).values() if v == harness.FAIL
    )
    conj_fail = sum(
        1 for d in functions
        for v in d.get("conjectures", {}).values() if v == harness.FAIL
    )
    print(f"verify: {len(functions)} functions, {errors} errors, "
          f"{theorem_fail} theorem failures, {conj_fail} conjecture counterexamples")
    if args.json:
        _emit(write_report({"schema": 1, "functions": functions}), args.json)
    return code


def _cmd_gamma(args) -> int:
    rec = _records_from_args(args, allow_many=False)[0]
    try:
        table = gamma(build_vecfn(rec))
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(write_boolfn_tt(table), args.out)
    return 0


def _cmd_spread(args) -> int:
    rec = _records_from_args(args, allow_many=False)[0]
    try:
        F = build_vecfn(rec)
        decomp = gamma_decompose(F)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    n = rec.n
    if args.v is not None:
        vs = [args.v]
    elif n <= 7:
        vs = list(range(1, 1 << n))
    else:
        print("error: pass --v for n > 7 (full dump is large)", file=sys.stderr)
        return 2
    out = []
    for v in vs:
        zs = spread.zero_set(decomp, v)
        dec = spread.decompose_triples(zs, n) if (len(zs) - 1) % 3 == 0 else None
        if dec is None:
            out.append({"v": v, "size": len(zs), "triples": None,
                        "status": "NOT_DECOMPOSABLE"})
            print(f"v={v} |M|={len(zs)} NOT_DECOMPOSABLE")
        else:
            out.append({"v": v, "size": len(zs),
                        "triples": [list(t) for t in dec.triples], "status": "OK"})
            body = ";".join(f"({x},{y},{z})" for x, y, z in dec.triples)
            print(f"v={v} |M|={len(zs)} triples={body}")
    if args.json:
        _emit(write_report({"schema": 1, "spread": {"id": rec.id, "rows": out}}),
              args.json)
    return 0


def _cmd_conjecture3(args) -> int:
    n = args.n
    if n % 2 == 0 or n < 3:
        print("error: the family size (2^(n-1)-1)/3 requires odd n >= 3",
              file=sys.stderr)
        return 2
    if n != 5 and not args.force:
        print(f"error: n={n} requires --force (only n=5 is routine; larger n "
              "explodes combinatorially)", file=sys.stderr)
        return 2
    try:
        summary = spread.conjecture3_exhaustive(
            n, workers=args.threads, limit=args.limit
        )
    except spread.SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = {
        "n": summary.n,
        "family_size": summary.family_size,
        "line_count": summary.line_count,
        "families": summary.families,
        "hyperplane_families": summary.hyperplane_families,
        "even_families": summary.even_families,
        "even_subspace_families": summary.even_subspace_families,
        "counterexamples": summary.counterexamples,
        "cex_hyperplane_odd": summary.cex_hyperplane_odd,
        "cex_even_non_hyperplane": summary.cex_even_non_hyperplane,
        "first_counterexamples": [
            [list(t) for t in fam] for fam in summary.first_counterexamples
        ],
    }
    print(f"conjecture3 n={n}: families={summary.families} "
          f"hyperplane={summary.hyperplane_families} "
          f"counterexamples={summary.counterexamples}")
    for fam in summary.first_counterexamples:
        body = " ".join(f"({x},{y},{z})" for x, y, z in fam)
        print(f"counterexample: {body}")
    if args.json:
        _emit(write_report({"schema": 1, "conjecture3": doc}), args.json)
    return 3 if summary.counterexamples else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="apngamma",
        description="Associated Boolean functions of quadratic APN functions: "
                    "analysis, machine verification, and spread searches.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="descriptive report for selected functions")
    _add_selectors(p, with_range=True)
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--timings", action="store_true", help="include timing data")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="PASS/FAIL matrix over selected functions")
    _add_selectors(p, with_range=True)
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker processes (default: available parallelism)")
    p.add_argument("--timings", action="store_true", help="include timing data")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gamma", help="dump the associated function's truth table")
    _add_selectors(p, with_range=False)
    p.add_argument("--out", metavar="PATH", help="output path (default stdout)")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("spread", help="dump zero-set triple decompositions")
    _add_selectors(p, with_range=False)
    p.add_argument("--v", type=int, help="single component selector")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=_cmd_spread)

    p = sub.add_parser("conjecture3",
                       help="exhaustive hyperplane-parity search over families "
                            "of 2-dimensional subspaces")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--force", action="store_true",
                   help="allow n other than 5")
    p.add_argument("--limit", type=int, default=None,
                   help="abort after this many families per search task")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker processes (default: available parallelism)")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=_cmd_conjecture3)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except BrokenPipeError:
        return 0
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
