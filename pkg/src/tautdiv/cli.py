"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (unstable surface, genus 0,
invalid symbol, failed hypotheses, ...), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .boundary import SurfaceType, enumerate_upsilon_bar, enumerate_upsilon_bar_ext
from .curves import generate_all
from .divisors import TautClass, format_rational, reduce_to_basis
from .errors import MalformedInput, TautologicalError
from .independence import (
    build_matrix,
    expected_picard_rank,
    independence_certificate,
    rank,
    rank_table,
    relation_check,
)
from .zariski import FiberConfiguration, check_hypotheses, classify

RANK_TABLE_HEADER = ["g", "n", "upsilon", "rank", "expected", "match"]


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) if k else cell.ljust(w) for k, (cell, w) in enumerate(zip(r, widths))).rstrip()
        for r in rows
    )


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON: {exc}") from None


def _surface(args) -> SurfaceType:
    return SurfaceType(args.g, args.n)


def cmd_boundaries(args):
    s = _surface(args)
    found = enumerate_upsilon_bar_ext(s) if args.extended else enumerate_upsilon_bar(s)
    labels = [b.encode() for b in found]
    return _dumps(labels) if args.format == "json" else "\n".join(labels)


def cmd_curves(args):
    labels = [c.encode() for c in generate_all(_surface(args))]
    return _dumps(labels) if args.format == "json" else "\n".join(labels)


def cmd_matrix(args):
    m = build_matrix(_surface(args), include_axiom=not args.no_axiom)
    if args.format == "json":
        return _dumps(m.to_json())
    rows = [[""] + m.column_labels]
    for label, row in zip(m.row_labels, m.entries):
        rows.append([label] + [format_rational(x) for x in row])
    return _table(rows)


def cmd_rank(args):
    m = build_matrix(_surface(args), include_axiom=not args.no_axiom)
    return str(rank(m))


def cmd_expected_rank(args):
    return str(expected_picard_rank(_surface(args)))


def cmd_certificate(args):
    m = build_matrix(_surface(args), include_axiom=not args.no_axiom)
    cols = None
    if args.columns is not None:
        cols = [c for c in _split_columns(args.columns)]
    cert = independence_certificate(m, cols)
    if args.format == "json":
        return _dumps(cert.to_json())
    lines = [f"kind: {cert.kind}", "columns: " + " ".join(cert.column_labels)]
    if cert.is_witness:
        lines.append("rows: " + " ".join(f"{r}:{lbl}" for r, lbl in zip(cert.rows, cert.row_labels)))
        lines.append(f"determinant: {format_rational(cert.determinant)}")
    else:
        lines.append("kernel: " + " ".join(format_rational(x) for x in cert.kernel))
    return "\n".join(lines)


def _split_columns(text: str) -> list[str]:
    # commas also appear inside label lists, so split only at top level
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [c.strip() for c in out if c.strip()] if text.strip() else []


def _class_table(cls: TautClass) -> str:
    rows = [["symbol", "coefficient"]]
    rows += [[s.encode(), format_rational(c)] for s, c in cls.items()]
    return _table(rows)


def cmd_reduce(args):
    reduced = reduce_to_basis(TautClass.from_json(_read_json(args.file)))
    return _dumps(reduced.to_json()) if args.format == "json" else _class_table(reduced)


def cmd_relation_check(args):
    report = relation_check(TautClass.from_json(_read_json(args.file)))
    if args.format == "json":
        return _dumps(report.to_json())
    rows = [["curve", "degree"]]
    rows += [[c, format_rational(v)] for c, v in report.values]
    rows.append(["axiom:lambda (axiom)", format_rational(report.axiom_value)])
    verdict = "relation" if report.is_relation else (
        "curves vanish, but not a relation (lambda axiom is nonzero)" if report.passed
        else "not a relation"
    )
    if report.vacuous:
        verdict += " [no test curves on this surface]"
    return _table(rows) + f"\nresult: {verdict}"


class _DomainExit(Exception):
    def __init__(self, text, message):
        super().__init__(message)
        self.text = text


def cmd_zariski(args):
    cfg = FiberConfiguration.from_json(_read_json(args.file))
    report = check_hypotheses(cfg)
    result = classify(cfg) if report.passed else None
    if args.format == "json":
        text = _dumps({"hypotheses": report.to_json(),
                       "classification": None if result is None else result.to_json()})
    else:
        lines = [f"{k}: {v}" for k, v in report.to_json().items()]
        if result is not None:
            lines += [f"{k}: {v}" for k, v in result.to_json().items()]
        text = "\n".join(lines)
    if result is None:
        raise _DomainExit(text, "hypotheses failed: " + "; ".join(report.failures()))
    return text


def cmd_rank_table(args):
    rows = rank_table(args.gmax, args.nmax)
    if args.format == "json":
        return _dumps(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RANK_TABLE_HEADER)
    for r in rows:
        writer.writerow([r["g"], r["n"], r["upsilon"], r["rank"], r["expected"], str(r["match"]).lower()])
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")

    parser = argparse.ArgumentParser(
        prog="tautdiv", description="Exact calculus of tautological divisor classes on M_{g,n}-bar."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def surface_cmd(name, func, help_, axiom=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("g", type=int)
        p.add_argument("n", type=int)
        if axiom:
            p.add_argument("--no-axiom", action="store_true", help="drop the formal lambda row")
        p.set_defaults(func=func)
        return p

    p = surface_cmd("boundaries", cmd_boundaries, "list boundary classes")
    p.add_argument("--extended", action="store_true", help="include the point classes pt:t")
    surface_cmd("curves", cmd_curves, "list test curves")
    surface_cmd("matrix", cmd_matrix, "pairing matrix", axiom=True)
    surface_cmd("rank", cmd_rank, "exact rank of the pairing matrix", axiom=True)
    surface_cmd("expected-rank", cmd_expected_rank, "size of the canonical basis")
    p = surface_cmd("certificate", cmd_certificate, "independence certificate", axiom=True)
    p.add_argument("--columns", help="comma separated column symbols (default: all)")

    for name, func, help_ in (
        ("reduce", cmd_reduce, "rewrite a class in the canonical basis"),
        ("relation-check", cmd_relation_check, "pair a class with every test curve"),
        ("zariski", cmd_zariski, "check and classify a fiber intersection form"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="JSON input file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("rank-table", parents=[common], help="CSV of ranks over a (g, n) range")
    p.add_argument("--gmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_rank_table)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except _DomainExit as exc:
        print(exc.text, file=stdout)
        print(f"error: {exc}", file=stderr)
        return 1
    except MalformedInput as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except TautologicalError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(text, file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
