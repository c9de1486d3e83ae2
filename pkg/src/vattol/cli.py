"""Command-line front end: generate graphs, compute metrics, verify bounds.

Commands
--------
- ``gen SPEC -o FILE``: write a family graph as an edge-list file
- ``metrics INPUT --vat --conductance --lambda2 ...``: compute metrics
  for one graph (a file path or a family spec string)
- ``verify ...``: run the inequality suite over a corpus selection and
  emit one report row per check
- ``corpus -o DIR``: materialize the standard test corpus as edge-list
  files plus a manifest

Exit codes: 0 success (for ``verify``: every non-skipped check holds),
1 verification failure, 2 usage or input error.

JSON and CSV outputs carry the same values; fractions appear as exact
numerator/denominator pairs plus a convenience decimal rounded to 12
significant digits (the exact fields are authoritative).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import IO, Iterable, Iterator

from . import corpus as corpus_mod
from .errors import VattolError
from .generators import FamilySpec, enumerate_small_regular, parse_family_spec
from .graph import (
    Graph,
    read_edge_list_path,
    regularity,
    restrict_to_largest_component,
    write_edge_list,
    write_edge_list_path,
)
from .metrics import (
    alpha_beta_vat_exact,
    conductance_exact,
    vat_exact,
    weighted_vat_exact,
)
from .spectral import lambda2
from .verify import (
    CHECK_GROUPS,
    SPECTRAL_TOL,
    TheoremReport,
    iter_suite,
    normalize_checks,
)

VERIFY_CSV_COLUMNS = (
    "graph_id",
    "n",
    "m",
    "d",
    "theorem",
    "lhs_num",
    "lhs_den",
    "lhs_real",
    "rhs_num",
    "rhs_den",
    "rhs_real",
    "holds",
    "strict_holds",
    "slack",
    "witness",
)

METRICS_CSV_COLUMNS = (
    "graph_id",
    "n",
    "m",
    "d",
    "metric",
    "parameters",
    "num",
    "den",
    "real",
    "witness",
)


def _real(x: float) -> float:
    """Decimal convenience value: 12 significant digits."""
    return float(f"{x:.12g}")


def _real_str(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


def _side_json(value: Fraction | float | None):
    if value is None:
        return None
    if isinstance(value, Fraction):
        return {
            "num": value.numerator,
            "den": value.denominator,
            "real": _real(float(value)),
        }
    return {"real": _real(value)}


def _side_csv(value: Fraction | float | None) -> tuple[str, str, str]:
    if value is None:
        return "", "", ""
    if isinstance(value, Fraction):
        return str(value.numerator), str(value.denominator), _real_str(float(value))
    return "", "", _real_str(value)


def _witness_str(witnesses: dict[str, list[int]] | None) -> str:
    if not witnesses:
        return ""
    return ";".join(
        f"{name}=" + " ".join(str(v) for v in ids)
        for name, ids in witnesses.items()
    )


def _bool_str(b: bool | None) -> str:
    return "" if b is None else ("true" if b else "false")


def report_to_json(r: TheoremReport) -> dict:
    return {
        "graph_id": r.graph_id,
        "n": r.n,
        "m": r.m,
        "d": r.d,
        "theorem": r.theorem,
        "lhs": _side_json(r.lhs),
        "rhs": _side_json(r.rhs),
        "holds": r.holds,
        "strict_holds": r.strict_holds,
        "slack": None if r.slack is None else _real(r.slack),
        "witness": r.witnesses,
        "skipped": r.skipped,
        "skip_reason": r.skip_reason,
    }


def report_to_csv_row(r: TheoremReport) -> list[str]:
    lhs = _side_csv(r.lhs)
    rhs = _side_csv(r.rhs)
    return [
        r.graph_id,
        str(r.n),
        str(r.m),
        "" if r.d is None else str(r.d),
        r.theorem,
        *lhs,
        *rhs,
        _bool_str(r.holds),
        _bool_str(r.strict_holds),
        _real_str(r.slack),
        _witness_str(r.witnesses),
    ]


def _write_reports_csv(reports: Iterable[TheoremReport], out: IO[str]) -> "_Summary":
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(VERIFY_CSV_COLUMNS)
    summary = _Summary()
    for r in reports:
        writer.writerow(report_to_csv_row(r))
        summary.add(r)
    return summary


def _write_reports_json(reports: Iterable[TheoremReport], out: IO[str]) -> "_Summary":
    summary = _Summary()
    out.write("[")
    first = True
    for r in reports:
        if not first:
            out.write(",\n ")
        else:
            out.write("\n ")
            first = False
        out.write(json.dumps(report_to_json(r), separators=(", ", ": ")))
        summary.add(r)
    out.write("\n]\n")
    return summary


class _Summary:
    """Streaming accumulator over report rows."""

    def __init__(self) -> None:
        self.graphs: set[str] = set()
        self.total = 0
        self.holds = 0
        self.strict = 0
        self.failed = 0
        self.skipped = 0
        self.equality_counts: dict[str, int] = {}
        self.strict_claim_equalities: dict[str, list[str]] = {
            "vat_lower": [],
            "vat_upper_unconditional": [],
        }

    def add(self, r: TheoremReport) -> None:
        self.graphs.add(r.graph_id)
        self.total += 1
        if r.skipped:
            self.skipped += 1
            return
        if r.holds:
            self.holds += 1
        else:
            self.failed += 1
        if r.strict_holds:
            self.strict += 1
        if r.equality:
            self.equality_counts[r.theorem] = self.equality_counts.get(r.theorem, 0) + 1
            if r.theorem in self.strict_claim_equalities:
                self.strict_claim_equalities[r.theorem].append(r.graph_id)

    def print_to(self, out: IO[str]) -> None:
        print(
            f"graphs={len(self.graphs)} reports={self.total} holds={self.holds} "
            f"strict={self.strict} failed={self.failed} skipped={self.skipped}",
            file=out,
        )
        if self.equality_counts:
            parts = " ".join(
                f"{name}={count}"
                for name, count in sorted(self.equality_counts.items())
            )
            print(f"equalities by theorem: {parts}", file=out)
        for name, ids in self.strict_claim_equalities.items():
            if ids:
                print(f"equality cases for {name}: {', '.join(ids)}", file=out)


def _load_input(text: str) -> tuple[str, Graph]:
    """Resolve a CLI input: an existing file path, else a family spec."""
    if os.path.exists(text):
        return text, read_edge_list_path(text)
    spec = parse_family_spec(text)
    return str(spec), spec.build()


def _open_out(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = parse_family_spec(args.spec)
    g = spec.build()
    if args.output:
        write_edge_list_path(g, args.output)
    else:
        write_edge_list(g, sys.stdout)
    d = regularity(g)
    print(f"n={g.n} m={g.m} d={'-' if d is None else d}", file=sys.stderr)
    return 0


def _metric_rows(args: argparse.Namespace, g: Graph):
    """Yield (metric, parameters, value, witness_vertices) tuples."""
    if args.vat:
        r = vat_exact(g, args.limit)
        yield "vat", "", r.value, r.witness_vertices
    if args.conductance:
        r = conductance_exact(g, args.limit)
        yield "conductance", "", r.value, r.witness_vertices
    if args.lambda2:
        s = lambda2(g)
        yield "lambda2", "", s.lambda2, None
        yield "spectral_gap", "", s.gap, None
    if args.alpha_beta:
        alpha, beta = args.alpha_beta
        r = alpha_beta_vat_exact(g, alpha, beta, args.limit)
        yield "alpha_beta_vat", f"alpha={alpha:g} beta={beta:g}", r.value, r.witness_vertices
    if args.weighted:
        r = weighted_vat_exact(g, args.limit)
        yield "weighted_vat", "", r.value, r.witness_vertices


def _cmd_metrics(args: argparse.Namespace) -> int:
    graph_id, g = _load_input(args.input)
    restricted = False
    if args.restrict_lcc:
        before = g.n
        g = restrict_to_largest_component(g)
        restricted = g.n != before
    if not any([args.vat, args.conductance, args.lambda2, args.alpha_beta, args.weighted]):
        args.vat = args.conductance = True
    rows = list(_metric_rows(args, g))
    d = regularity(g)
    out = _open_out(args.output)
    try:
        if args.format == "json":
            record: dict = {
                "graph_id": graph_id,
                "n": g.n,
                "m": g.m,
                "d": d,
                "restricted_to_largest_component": restricted,
            }
            for metric, params, value, witness in rows:
                entry: dict = {}
                if isinstance(value, Fraction):
                    entry.update(
                        num=value.numerator,
                        den=value.denominator,
                        real=_real(float(value)),
                    )
                else:
                    entry["real"] = _real(float(value))
                if witness is not None:
                    entry["witness"] = witness
                if params:
                    entry["parameters"] = params
                record[metric] = entry
            json.dump(record, out, indent=2)
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(METRICS_CSV_COLUMNS)
            for metric, params, value, witness in rows:
                if isinstance(value, Fraction):
                    num, den, real = _side_csv(value)
                else:
                    num, den, real = "", "", _real_str(float(value))
                writer.writerow(
                    [
                        graph_id,
                        str(g.n),
                        str(g.m),
                        "" if d is None else str(d),
                        metric,
                        params,
                        num,
                        den,
                        real,
                        "" if witness is None else " ".join(map(str, witness)),
                    ]
                )
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    value = int(text)
    return value, value


def _verify_selection(args: argparse.Namespace) -> Iterator[tuple[str, Graph]]:
    produced = False
    if args.corpus == "standard":
        produced = True
        yield from corpus_mod.standard_corpus()
    elif args.corpus == "theorem":
        produced = True
        yield from corpus_mod.theorem_corpus(base_seed=args.seed)
    for family in args.family or ():
        produced = True
        if family == "petersen":
            spec = FamilySpec("petersen")
            yield str(spec), spec.build()
            continue
        if args.n is None:
            raise VattolError(f"--family {family} needs --n A..B")
        lo, hi = args.n
        for param in range(lo, hi + 1):
            spec = FamilySpec(family, (param,))
            yield str(spec), spec.build()
    for spec_text in args.spec or ():
        produced = True
        spec = parse_family_spec(spec_text)
        yield str(spec), spec.build()
    if args.exhaustive:
        produced = True
        n, d = args.exhaustive
        for i, g in enumerate(enumerate_small_regular(n, d)):
            yield f"exhaustive:{n},{d},i={i}", g
    for path in args.files or ():
        produced = True
        yield path, read_edge_list_path(path)
    if not produced:
        raise VattolError(
            "empty selection: use --corpus, --family/--n, --spec, "
            "--exhaustive or --files"
        )


def _cmd_verify(args: argparse.Namespace) -> int:
    graphs = _verify_selection(args)
    reports = iter_suite(
        graphs,
        checks=normalize_checks(args.checks),
        limit=args.limit,
        tol=args.tolerance,
        jobs=args.jobs,
    )
    out = _open_out(args.output)
    try:
        if args.format == "json":
            summary = _write_reports_json(reports, out)
        else:
            summary = _write_reports_csv(reports, out)
    finally:
        if out is not sys.stdout:
            out.close()
    summary.print_to(sys.stderr)
    return 1 if summary.failed else 0


def _safe_name(graph_id: str) -> str:
    return (
        graph_id.replace(":", "-")
        .replace(",", "_")
        .replace("=", "-")
        .replace("+", "-")
    )


def _cmd_corpus(args: argparse.Namespace) -> int:
    os.makedirs(args.output, exist_ok=True)
    manifest_path = os.path.join(args.output, "manifest.csv")
    with open(manifest_path, "w", encoding="utf-8") as mf:
        writer = csv.writer(mf, lineterminator="\n")
        writer.writerow(["id", "file", "n", "m", "d"])
        for graph_id, g in corpus_mod.standard_corpus():
            fname = _safe_name(graph_id) + ".edges"
            write_edge_list_path(g, os.path.join(args.output, fname))
            d = regularity(g)
            writer.writerow(
                [graph_id, fname, g.n, g.m, "" if d is None else d]
            )
    print(f"corpus written to {args.output}", file=sys.stderr)
    return 0


def _alpha_beta(text: str) -> tuple[float, float]:
    try:
        alpha, beta = text.split(",")
        return float(alpha), float(beta)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected 'alpha,beta', got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vattol",
        description="Exact graph resilience metrics and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a family graph as an edge list")
    p_gen.add_argument("spec", help="family spec, e.g. cycle:6 or random_regular:20,3,seed=42")
    p_gen.add_argument("-o", "--output", help="output file (default: stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_met = sub.add_parser("metrics", help="compute metrics for one graph")
    p_met.add_argument("input", help="edge-list file or family spec string")
    p_met.add_argument("--vat", action="store_true")
    p_met.add_argument("--conductance", action="store_true")
    p_met.add_argument("--lambda2", action="store_true")
    p_met.add_argument("--alpha-beta", type=_alpha_beta, metavar="A,B")
    p_met.add_argument("--weighted", action="store_true")
    p_met.add_argument(
        "--restrict-lcc",
        action="store_true",
        help="restrict a disconnected input to its largest component",
    )
    p_met.add_argument("--format", choices=("json", "csv"), default="json")
    p_met.add_argument("--limit", type=int, default=None, help="enumeration limit")
    p_met.add_argument("-o", "--output")
    p_met.set_defaults(func=_cmd_metrics)

    p_ver = sub.add_parser("verify", help="run the bound-verification suite")
    p_ver.add_argument("--corpus", choices=("standard", "theorem"))
    p_ver.add_argument("--family", action="append", help="family name; repeatable")
    p_ver.add_argument("--n", type=_parse_range, help="family parameter range A..B")
    p_ver.add_argument("--spec", action="append", help="family spec string; repeatable")
    p_ver.add_argument(
        "--exhaustive",
        nargs=2,
        type=int,
        metavar=("N", "D"),
        help="all labeled connected d-regular graphs on n vertices",
    )
    p_ver.add_argument("--files", nargs="+", help="edge-list files")
    p_ver.add_argument(
        "--checks",
        default="all",
        help=f"comma list of check groups (default all): {', '.join(CHECK_GROUPS)}",
    )
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--format", choices=("json", "csv"), default="csv")
    p_ver.add_argument("--limit", type=int, default=None)
    p_ver.add_argument("--tolerance", type=float, default=SPECTRAL_TOL)
    p_ver.add_argument("--seed", type=int, default=42, help="base seed for corpus random members")
    p_ver.add_argument("-o", "--output")
    p_ver.set_defaults(func=_cmd_verify)

    p_cor = sub.add_parser("corpus", help="materialize the standard corpus")
    p_cor.add_argument("-o", "--output", required=True, help="output directory")
    p_cor.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (VattolError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
