"""Command-line front end.

Subcommands: parse and print terms, run the locally nameless operations,
and execute the law suites. Exit codes: 0 success (and all laws passed),
1 usage error, 2 term parse error, 3 at least one law failed.

Law summaries are deterministic: the same seed, samples, and depth
produce byte-identical output. ``--report-dir`` additionally writes the
results as a CSV table and a rendered figure.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .categorical import check_categorical_axioms, check_roundtrip
from .dtm import check_kleisli_dtm_laws
from .lam import (
    ParseError,
    gen_term_rng,
    ln_categorical,
    ln_dtm,
    parse_term,
    print_term,
    term_to_json,
)
from .ln import check_subst_lemmas, fv, lc, open_term, subst
from .report import LawReport
from .sampling import gen_fn, gen_value, ln_registry
from .applicatives import check_applicative_laws, check_morphism_laws

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_LAW_FAILURE = 3

SUITES = ("kleisli", "categorical", "roundtrip", "subst", "applicative")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="decotrav",
        description="first-order syntax with binding: terms, locally nameless operations, law suites",
    )
    parser.add_argument("--version", action="version", version=f"decotrav {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser, terms: Sequence[str]) -> None:
        p.add_argument("--mode", choices=("ln", "named"), default="ln",
                       help="term syntax: locally nameless or named (default: ln)")
        p.add_argument("--output", choices=("text", "json"), default="text",
                       help="output format (default: text)")
        p.add_argument("--stdin", action="store_true",
                       help=f"read {terms[-1].upper()} from standard input instead of an argument")
        for name in terms[:-1]:
            p.add_argument(name, help=f"the {name} argument, as quoted term text")
        p.add_argument(terms[-1], nargs="?", default=None,
                       help=f"the {terms[-1]} argument, as quoted term text")

    p = sub.add_parser("parse", help="parse a term and echo its canonical form")
    add_common(p, ["term"])

    p = sub.add_parser("open", help="replace indices bound to the removed outermost binder")
    add_common(p, ["replacement", "term"])

    p = sub.add_parser("subst", help="substitute a term for a free atom")
    p.add_argument("atom", help="the atom to replace")
    add_common(p, ["replacement", "term"])

    p = sub.add_parser("lc", help="test a term for local closure")
    add_common(p, ["term"])

    p = sub.add_parser("fv", help="list the free atoms of a term")
    add_common(p, ["term"])

    p = sub.add_parser("laws", help="run the law suites")
    p.add_argument("--suite", choices=SUITES, default=None,
                   help="run one suite (default: run all suites)")
    p.add_argument("--seed", type=int, default=None,
                   help="base random seed (default: DECOTRAV_SEED or 0)")
    p.add_argument("--samples", type=int, default=200,
                   help="samples per law (default: 200)")
    p.add_argument("--depth", type=int, default=6,
                   help="maximum depth of generated terms (default: 6)")
    p.add_argument("--output", choices=("text", "json"), default="text",
                   help="output format (default: text)")
    p.add_argument("--report-dir", default=None, metavar="DIR",
                   help="also write law_results.csv and law_results.png to DIR")
    return parser


def _read_term_arg(args, name: str) -> str:
    value = getattr(args, name)
    if args.stdin:
        if value is not None:
            raise _UsageError(f"{name} was given both as an argument and over --stdin")
        return sys.stdin.read()
    if value is None:
        raise _UsageError(f"missing {name} argument (or pass --stdin)")
    return value


def _emit_term(t, args) -> None:
    if args.output == "json":
        print(json.dumps(term_to_json(t), separators=(",", ":")))
    else:
        print(print_term(t, args.mode))


def _require_ln(args) -> None:
    if args.mode != "ln":
        raise _UsageError("this operation is defined on locally nameless terms; use --mode ln")


def _run_suites(suite: str | None, seed: int, samples: int, depth: int) -> list[LawReport]:
    dtm = ln_dtm()
    registry = ln_registry(dtm, depth=min(depth, 4))
    gen = lambda rng: gen_term_rng(rng, depth, "ln")
    reports: list[LawReport] = []
    wanted = SUITES if suite is None else (suite,)
    if "kleisli" in wanted:
        reports.append(
            check_kleisli_dtm_laws(dtm, gen, registry, samples=samples, seed=seed)
        )
    if "categorical" in wanted:
        reports.append(
            check_categorical_axioms(ln_categorical(), gen, registry, samples=samples, seed=seed)
        )
    if "roundtrip" in wanted:
        reports.append(
            check_roundtrip(dtm, ln_categorical(), gen, registry, samples=samples, seed=seed)
        )
    if "subst" in wanted:
        reports.append(check_subst_lemmas(dtm, gen, samples=samples, seed=seed))
    if "applicative" in wanted:
        for app in registry.applicatives:
            reports.append(
                check_applicative_laws(app, gen_value, gen_fn, samples=samples, seed=seed)
            )
        for phi in registry.morphisms:
            reports.append(
                check_morphism_laws(phi, gen_value, gen_fn, samples=samples, seed=seed)
            )
    return reports


def _report_rows(reports: list[LawReport]) -> list[dict]:
    rows = []
    for report in reports:
        for r in report.results:
            rows.append(
                {
                    "suite": report.suite,
                    "law": r.name,
                    "passed": r.passed,
                    "samples": r.samples,
                    "counterexample": "" if r.counterexample is None
                    else r.counterexample.render().replace("\n", " "),
                }
            )
    return rows


def _write_report_files(reports: list[LawReport], directory: str, header: str) -> None:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    rows = _report_rows(reports)

    with (out / "law_results.csv").open("w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["suite", "law", "passed", "samples", "counterexample"]
        )
        writer.writeheader()
        writer.writerows(rows)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [f"{row['suite']}: {row['law']}" for row in rows]
    sizes = [row["samples"] for row in rows]
    colors = ["#2a9d4e" if row["passed"] else "#c0392b" for row in rows]
    height = max(2.5, 0.28 * len(rows) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ax.barh(range(len(rows)), sizes, color=colors)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("samples checked")
    ax.set_title(header)
    fig.tight_layout()
    fig.savefig(out / "law_results.png", dpi=120)
    plt.close(fig)


def _cmd_laws(args) -> int:
    if args.samples < 1:
        raise _UsageError("--samples must be at least 1")
    if args.depth < 1:
        raise _UsageError("--depth must be at least 1")
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("DECOTRAV_SEED", "0"))
    reports = _run_suites(args.suite, seed, args.samples, args.depth)
    failed = sum(len(report.failures) for report in reports)
    header = f"law results (seed={seed} samples={args.samples} depth={args.depth})"

    if args.output == "json":
        payload = {
            "seed": seed,
            "samples": args.samples,
            "depth": args.depth,
            "failed": failed,
            "suites": [
                {
                    "suite": report.suite,
                    "laws": [
                        {
                            "name": r.name,
                            "passed": r.passed,
                            "samples": r.samples,
                            "counterexample": None
                            if r.counterexample is None
                            else {
                                "inputs": r.counterexample.inputs,
                                "lhs": r.counterexample.lhs,
                                "rhs": r.counterexample.rhs,
                            },
                        }
                        for r in report.results
                    ],
                }
                for report in reports
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(header)
        for report in reports:
            print(report.format_text())
        total = sum(len(report.results) for report in reports)
        if failed:
            print(f"FAILED: {failed} of {total} laws")
        else:
            print(f"all {total} laws passed")

    if args.report_dir is not None:
        _write_report_files(reports, args.report_dir, header)

    return EXIT_LAW_FAILURE if failed else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as err:
        print(f"decotrav: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "laws":
            return _cmd_laws(args)

        if args.command == "parse":
            t = parse_term(_read_term_arg(args, "term"), args.mode)
            _emit_term(t, args)
            return EXIT_OK

        dtm = ln_dtm()
        _require_ln(args)
        if args.command == "open":
            u = parse_term(args.replacement, args.mode)
            t = parse_term(_read_term_arg(args, "term"), args.mode)
            _emit_term(open_term(dtm, u, t), args)
            return EXIT_OK
        if args.command == "subst":
            u = parse_term(args.replacement, args.mode)
            t = parse_term(_read_term_arg(args, "term"), args.mode)
            _emit_term(subst(dtm, args.atom, u, t), args)
            return EXIT_OK
        if args.command == "lc":
            t = parse_term(_read_term_arg(args, "term"), args.mode)
            verdict = lc(dtm, t)
            print(json.dumps(verdict) if args.output == "json" else str(verdict).lower())
            return EXIT_OK
        if args.command == "fv":
            t = parse_term(_read_term_arg(args, "term"), args.mode)
            atoms = sorted(fv(dtm, t))
            print(json.dumps(atoms) if args.output == "json" else " ".join(atoms))
            return EXIT_OK
    except _UsageError as err:
        print(f"decotrav: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as err:
        print(f"decotrav: parse error: {err}", file=sys.stderr)
        return EXIT_PARSE

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
