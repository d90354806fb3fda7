"""Command-line front end: verify, sweep, betti, ledger, covers.

Exit codes: 0 success, 1 a check failed, 2 (gamma, e) outside the theorem's
range, 64 usage error, 65 unreadable or invalid Betti table file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Sequence

from conecurves import betti, covers, lattice, ledger
from conecurves.errors import ConeCurveError, HypothesisError, UnsupportedMultiplicity

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_HYPOTHESIS = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65

FORMATS = ("json", "csv", "markdown")
SWEEP_HEADER = ["gamma", "e", "d", "g", "r", "dim", "tangent", "sigma", "pass"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is taken
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """'3..5' -> range(3, 6); '4' -> range(4, 5)."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected N or N..M") from None
    if stop < start:
        raise UsageError(f"empty range {text!r}")
    return range(start, stop + 1)


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _verdict(ok: bool, color: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if not color:
        return word
    return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _md_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _json(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _resolve_e(gamma: int, args: argparse.Namespace) -> int:
    if args.e is not None:
        return args.e
    return 4 * gamma + 5 + args.e_offset


def cmd_verify(args: argparse.Namespace, out) -> int:
    gamma = args.gamma
    e = _resolve_e(gamma, args)
    try:
        report = ledger.verify_main_theorem(gamma, e, with_betti=args.with_betti)
    except HypothesisError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS

    if args.format == "json":
        doc = report.to_dict()
        doc["all_pass"] = report.all_pass
        out.write(_json(doc))
    elif args.format == "csv":
        rows = [["name", "pass", "lhs", "rhs", "assumed"]]
        rows += [[c.name, c.passed, c.lhs, c.rhs, c.assumed] for c in report.checks]
        out.write(_csv(rows))
    else:
        color = _use_color(out)
        out.write(f"## gamma={gamma}, e={e}: d={report.d}, g={report.g}, r={report.r}\n\n")
        out.write(f"dim H = {report.dim_family}, dim T = {report.dim_tangent}, "
                  f"sigma = {report.superabundance}\n\n")
        rows = [[c.name, _verdict(c.passed, color), c.lhs, c.rhs, "yes" if c.assumed else ""]
                for c in report.checks]
        out.write(_md_table(["check", "result", "lhs", "rhs", "assumed"], rows))
    return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED


def _sweep_cells(args: argparse.Namespace) -> list[tuple[int, int]]:
    gammas = parse_range(args.gamma)
    cells = []
    for gamma in gammas:
        if args.e_offset is not None:
            es = [4 * gamma + 5 + k for k in parse_range(args.e_offset)]
        else:
            es = list(parse_range(args.e))
        cells.extend((gamma, e) for e in es)
    return sorted(cells)


def cmd_sweep(args: argparse.Namespace, out) -> int:
    cells = _sweep_cells(args)
    rows: list[dict[str, Any]] = []
    for gamma, e in cells:
        try:
            report = ledger.verify_main_theorem(gamma, e)
        except HypothesisError:
            rows.append({"gamma": gamma, "e": e, "skipped": True})
            continue
        rows.append({
            "gamma": gamma, "e": e, "d": report.d, "g": report.g, "r": report.r,
            "dim": report.dim_family, "tangent": report.dim_tangent,
            "sigma": report.superabundance, "pass": report.all_pass,
        })
    evaluated = [row for row in rows if not row.get("skipped")]
    if not evaluated:
        print("sweep: no (gamma, e) cell lies in the theorem's range", file=sys.stderr)
        return EXIT_USAGE
    all_pass = all(row["pass"] for row in evaluated)
    min_sigma = min(row["sigma"] for row in evaluated)

    if args.format == "json":
        out.write(_json({"rows": rows, "all_pass": all_pass, "min_sigma": min_sigma}))
    else:
        table = []
        for row in rows:
            if row.get("skipped"):
                table.append([row["gamma"], row["e"]] + [""] * 6 + ["skipped"])
            else:
                table.append([row[k] for k in SWEEP_HEADER])
        if args.format == "csv":
            out.write(_csv([SWEEP_HEADER] + table))
        else:
            color = _use_color(out)
            for line in table:
                if isinstance(line[-1], bool):
                    line[-1] = _verdict(line[-1], color)
            out.write(_md_table(SWEEP_HEADER, table))
            out.write(f"\nmin sigma = {min_sigma}\n")
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def _load_table(path: str) -> betti.BettiTable:
    with open(path, encoding="utf-8") as fh:
        return betti.BettiTable.from_dict(json.load(fh))


def cmd_betti(args: argparse.Namespace, out) -> int:
    if args.file is not None:
        try:
            table_y = _load_table(args.file)
            expected_d, expected_g = betti.expected_invariants(table_y, args.m)
        except (OSError, ValueError) as exc:
            # json.JSONDecodeError and ConeCurveError are both ValueErrors
            print(f"betti: cannot use table {args.file}: {exc}", file=sys.stderr)
            return EXIT_DATAERR
    else:
        if args.rational_normal < 2:
            raise UsageError("--rational-normal needs e >= 2")
        table_y = betti.rational_normal_betti(args.rational_normal)
        expected_d, expected_g = betti.expected_invariants(table_y, args.m)

    try:
        table_x = betti.cg_transform(table_y, args.m)
    except ConeCurveError as exc:
        print(f"betti: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    hp_y = betti.hilbert_polynomial(table_y)
    hp_x = betti.hilbert_polynomial(table_x)
    hp_expected = betti.curve_hilbert_polynomial(expected_d, expected_g)
    match = hp_x == hp_expected
    separation = betti.degree_separation_check(table_x, args.m)

    doc = {
        "m": args.m,
        "input": table_y.to_dict(),
        "transformed": table_x.to_dict(),
        "hilbert_input": betti.format_polynomial(hp_y),
        "hilbert_transformed": betti.format_polynomial(hp_x),
        "expected": {"d": expected_d, "g": expected_g,
                     "hilbert": betti.format_polynomial(hp_expected)},
        "hilbert_match": match,
        "separation": separation,
    }
    if args.format == "json":
        out.write(_json(doc))
    elif args.format == "csv":
        rows = [["table", "step", "twist", "strand"]]
        for name, table in (("input", table_y), ("transformed", table_x)):
            for k, step in enumerate(table.steps, start=1):
                tags = table.strands[k - 1] if table.strands else [""] * len(step)
                rows += [[name, k, b, tag] for b, tag in zip(step, tags)]
        out.write(_csv(rows))
    else:
        color = _use_color(out)
        for name, table in (("input", table_y), ("transformed", table_x)):
            out.write(f"### {name} (P^{table.ambient})\n\n")
            rows = [[k, len(step), " ".join(map(str, step))]
                    for k, step in enumerate(table.steps, start=1)]
            out.write(_md_table(["step", "rank", "twists"], rows) + "\n")
        out.write(f"Hilbert polynomial of input: {doc['hilbert_input']}\n")
        out.write(f"Hilbert polynomial of transform: {doc['hilbert_transformed']}\n")
        out.write(f"expected (d, g) = ({expected_d}, {expected_g}): "
                  f"{doc['expected']['hilbert']} {_verdict(match, color)}\n")
        out.write(f"degree separation: {str(separation).lower()}\n")
    return EXIT_OK if match else EXIT_CHECK_FAILED


def cmd_ledger(args: argparse.Namespace, out) -> int:
    gamma = args.gamma
    e = _resolve_e(gamma, args)
    try:
        ledgers = [ledger.family_dimension(gamma, e), ledger.tangent_dimension(gamma, e)]
    except HypothesisError as exc:
        print(f"ledger: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    if args.format == "json":
        out.write(_json({"gamma": gamma, "e": e, "ledgers": [lg.to_dict() for lg in ledgers]}))
    elif args.format == "csv":
        rows = [["ledger", "label", "value", "provenance", "assumed"]]
        for lg in ledgers:
            rows += [[lg.title, t.label, t.value, t.provenance, t.assumed] for t in lg.terms]
            rows.append([lg.title, "total", lg.total, "", ""])
        out.write(_csv(rows))
    else:
        for lg in ledgers:
            out.write(f"### {lg.title} (gamma={gamma}, e={e})\n\n")
            rows = [[t.label, t.value, t.provenance, "yes" if t.assumed else ""] for t in lg.terms]
            rows.append(["**total**", lg.total, "", ""])
            out.write(_md_table(["term", "value", "provenance", "assumed"], rows) + "\n")
    return EXIT_OK


def cmd_covers(args: argparse.Namespace, out) -> int:
    try:
        cover = covers.CoverData(lattice.BaseCurve(args.gamma, args.e), args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    curve = cover.base
    ram = covers.ramification_class(cover)
    half = covers.branch_half_class(cover)
    doc: dict[str, Any] = {
        "gamma": curve.gamma, "e": curve.e, "m": cover.m,
        "d": cover.degree, "g": cover.genus,
        "ramification_class": str(ram),
        "ramification_degree": covers.ramification_degree(cover),
        "ramification_intersection": lattice.intersect(ram, covers.cone_curve(cover), curve),
        "branch_half_class": str(half),
        "branch_half_degree": lattice.degree_base(half, curve),
        "riemann_hurwitz": covers.riemann_hurwitz_check(cover),
    }
    try:
        for key, twisted in (("pushforward_twisted", True), ("pushforward_untwisted", False)):
            summands = covers.pushforward_summands(cover, twisted)
            doc[key] = {"summands": [str(s) for s in summands],
                        "degrees": covers.summand_degrees(cover, twisted)}
    except UnsupportedMultiplicity:
        doc["pushforward_twisted"] = doc["pushforward_untwisted"] = None

    if args.format == "json":
        out.write(_json(doc))
    else:
        rows = []
        for key, value in doc.items():
            if isinstance(value, dict):
                value = "; ".join(f"{s} (deg {d})" for s, d in zip(value["summands"], value["degrees"]))
            rows.append([key, "" if value is None else value])
        if args.format == "csv":
            out.write(_csv([["field", "value"]] + rows))
        else:
            out.write(_md_table(["field", "value"], rows))
    ok = doc["riemann_hurwitz"] and doc["ramification_intersection"] == doc["ramification_degree"]
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _add_e_options(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--e", type=int, help="degree e of the base curve")
    group.add_argument("--e-offset", type=int, help="e = 4*gamma + 5 + offset")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conecurves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check every numerical claim for one (gamma, e)")
    p.add_argument("--gamma", type=int, required=True)
    _add_e_options(p)
    p.add_argument("--with-betti", action="store_true",
                   help="add the gamma = 0 resolution companion checks")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify a grid of (gamma, e) cells")
    p.add_argument("--gamma", required=True, help="range N..M")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--e", help="absolute range of e, N..M")
    group.add_argument("--e-offset", help="range of e - (4*gamma + 5), N..M")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("betti", help="transform a base-curve Betti table to the cone curve")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--rational-normal", type=int, metavar="E")
    src.add_argument("--file", metavar="PATH")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ledger", help="print the itemized dimension ledgers")
    p.add_argument("--gamma", type=int, required=True)
    _add_e_options(p)
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("covers", help="ramification, branch and pushforward data")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.set_defaults(func=cmd_covers)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "betti" and args.m < 2:
        print("conecurves: error: --m must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"conecurves: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
