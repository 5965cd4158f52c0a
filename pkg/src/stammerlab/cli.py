"""Command-line front end: ``stammerlab {enumerate,convert,verify,count,ansatz,render}``.

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
``STAMMERLAB_MAX_N`` caps every size argument (default 7).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any

from . import ansatz, counting, kinds, render, suites
from .partitions import partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_N = 7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def max_n() -> int:
    raw = os.environ.get("STAMMERLAB_MAX_N", str(DEFAULT_MAX_N))
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STAMMERLAB_MAX_N must be an integer, got {raw!r}") from None


def _check_size(n: int, what: str = "n") -> int:
    cap = max_n()
    if n < 0:
        raise UsageError(f"{what} must be nonnegative")
    if n > cap:
        raise UsageError(f"{what} = {n} exceeds STAMMERLAB_MAX_N = {cap}")
    return n


def _read_input(text: str | None, path: str | None) -> Any:
    if path is not None:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    if text is None:
        raise UsageError("give the object inline or with --input FILE")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        # bare words such as UUDD are accepted as strings
        return text.strip()
    # and so are digit strings such as 513462
    return str(data) if isinstance(data, int) else data


def _parse_partition(text: str | None):
    if not text:
        return ()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = text
    if not isinstance(data, list):
        data = [int(ch) for ch in str(data) if ch.isdigit()]
    try:
        return partition(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _dump(payload: Any, as_json: bool, text: str) -> str:
    return json.dumps(payload, ensure_ascii=False) + "\n" if as_json else text


# --- subcommands -----------------------------------------------------------

def cmd_enumerate(args) -> tuple[int, str]:
    n = _check_size(args.n)
    objs = list(kinds.enumerate_kind(args.kind, n))
    if args.json:
        return EXIT_OK, json.dumps([kinds.to_json(args.kind, o) for o in objs], ensure_ascii=False) + "\n"
    return EXIT_OK, "".join(kinds.to_text(args.kind, o) + "\n" for o in objs)


def cmd_convert(args) -> tuple[int, str]:
    data = _read_input(args.object, args.input)
    obj = kinds.parse(args.source, data)
    out = kinds.convert(args.source, obj, args.target)
    return EXIT_OK, _dump(kinds.to_json(args.target, out), args.json, kinds.to_text(args.target, out) + "\n")


def _write_report_dir(directory: Path, reports: list[suites.Report]) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="\t", lineterminator="\n")
    writer.writerow(["suite", "check", "passed", "cases", "detail", "counterexample"])
    names, cases, passed = [], [], []
    for rep in reports:
        for c in rep.checks:
            ce = "" if c.counterexample is None else json.dumps(c.counterexample, ensure_ascii=False, default=str)
            writer.writerow([rep.suite, c.name, "pass" if c.passed else "FAIL", c.cases, c.detail, ce])
            names.append(f"{rep.suite}: {c.name}")
            cases.append(c.cases)
            passed.append(c.passed)
    (directory / "verify.tsv").write_text(buf.getvalue(), encoding="utf-8")
    title = f"verify {'/'.join(r.suite for r in reports)}, max n = {reports[0].max_n}"
    (directory / "verify.svg").write_text(render.bar_chart_svg(names, cases, passed, title), encoding="utf-8")


def cmd_verify(args) -> tuple[int, str]:
    n = _check_size(args.max_n, "max-n")
    if args.samples:
        _check_size(args.sample_size, "sample-size")
    reports = suites.run(args.suite, n, samples=args.samples, sample_size=args.sample_size)
    ok = all(r.passed for r in reports)
    if args.report_dir:
        _write_report_dir(Path(args.report_dir), reports)
    payload = {"passed": ok, "reports": [r.to_json() for r in reports]}
    lines = []
    for rep in reports:
        for c in rep.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = "" if c.passed else f"  counterexample: {json.dumps(c.counterexample, ensure_ascii=False, default=str)}"
            lines.append(f"{mark}  {rep.suite}: {c.name} ({c.cases} cases){extra}")
    text = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_FAIL), _dump(payload, args.json, text)


def cmd_count(args) -> tuple[int, str]:
    n = _check_size(args.n)
    what = args.what
    brute = None
    if what == "stammering":
        mu, nu = _parse_partition(args.mu), _parse_partition(args.nu)
        value = counting.t_brute(n, mu, nu)
    elif what == "partial":
        if args.k is None:
            raise UsageError("count partial needs --k")
        value = counting.a(n, args.k)
        brute = counting.a_brute(n, args.k) if args.brute else None
    elif what in ("empty-to", "to-empty"):
        lam = _parse_partition(args.shape)
        if what == "empty-to":
            value = counting.t_empty_to(n, lam)
            brute = counting.t_empty_to_brute(n, lam) if args.brute else None
        else:
            value = counting.t_to_empty(n, lam)
            brute = counting.t_to_empty_brute(n, lam) if args.brute else None
    else:
        value = sum(1 for _ in kinds.enumerate_kind(what, n))
    payload = {"what": what, "n": n, "value": value}
    if brute is not None:
        payload["brute"] = brute
    text = f"{value}\n" if brute is None else f"{value} (brute force {brute})\n"
    code = EXIT_OK if brute is None or brute == value else EXIT_FAIL
    return code, _dump(payload, args.json, text)


def _q_term(e: int, c: int) -> str:
    power = "" if e == 0 else "q" if e == 1 else f"q^{e}"
    if not power:
        return str(c)
    return power if c == 1 else f"{c}*{power}"


def cmd_ansatz(args) -> tuple[int, str]:
    if args.what == "normal-order":
        word = args.arg.strip().upper()
        if set(word) - {"E", "F"}:
            raise UsageError("normal-order expects a word over E and F")
        nf = ansatz.normal_order(word)
        payload = [
            {"e_exp": i, "f_exp": j, "q_poly": [{"q_exp": e, "coeff": c} for e, c in poly.items()]}
            for (i, j), poly in nf.items()
        ]
        terms = []
        for (i, j), poly in nf.items():
            qp = " + ".join(_q_term(e, c) for e, c in poly.items())
            terms.append(f"({qp}) E^{i} F^{j}")
        return EXIT_OK, _dump(payload, args.json, " + ".join(terms) + "\n")
    if args.what == "prob":
        try:
            poly = ansatz.unnormalized_prob(args.arg)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            size = int(args.arg)
        except ValueError:
            raise UsageError("partition expects an integer N") from None
        poly = ansatz.partition_function(_check_size(size, "N"))
    payload: Any = ansatz.poly_to_json(poly)
    text = ansatz.format_poly(poly) + "\n"
    if args.at:
        try:
            q, a, b = (s.strip() for s in args.at.split(","))
            value = ansatz.evaluate(poly, q, a, b)
        except ValueError:
            raise UsageError("--at expects three rationals q,a,b") from None
        payload = {"polynomial": payload, "at": [q, a, b], "value": str(value)}
        text += f"{value}\n"
    return EXIT_OK, _dump(payload, args.json, text)


def cmd_render(args) -> tuple[int, str]:
    data = _read_input(args.object, args.input)
    obj = kinds.parse(args.kind, data)
    return EXIT_OK, render.render(args.kind, obj, args.format, args.view)


# --- parser ----------------------------------------------------------------

def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags with suppressed defaults so they never undo a value given earlier
    g = _Parser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g.add_argument("--seed-order", choices=["canonical"], default=default("canonical"),
                   help="enumeration and sampling order (only canonical is offered)")
    g.add_argument("--json", action="store_true", default=default(False), help="emit JSON instead of text")
    g.add_argument("--output", metavar="FILE", default=default(None),
                   help="write the result to FILE instead of stdout")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    p = _Parser(prog="stammerlab", description="Stammering tableaux, rook placements, Dyck chains and the matrix ansatz.", parents=[_global_flags(suppress=False)])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", parents=[common], help="list every object of a kind and size")
    e.add_argument("kind", choices=kinds.KINDS)
    e.add_argument("n", type=int)
    e.set_defaults(run=cmd_enumerate)

    c = sub.add_parser("convert", parents=[common], help="map an object to another representation")
    c.add_argument("source", choices=kinds.SOURCE_KINDS)
    c.add_argument("target", choices=kinds.KINDS)
    c.add_argument("object", nargs="?", help="JSON object (or a bare word)")
    c.add_argument("--input", metavar="FILE", help="read the object from FILE ('-' for stdin)")
    c.set_defaults(run=cmd_convert)

    v = sub.add_parser("verify", parents=[common], help="run invariant suites")
    v.add_argument("suite", choices=suites.SUITES + ("all",))
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--samples", type=int, default=0, help="random objects per round trip and construction check")
    v.add_argument("--sample-size", type=int, default=6)
    v.add_argument("--report-dir", metavar="DIR", help="also write verify.tsv and verify.svg into DIR")
    v.set_defaults(run=cmd_verify)

    k = sub.add_parser("count", parents=[common], help="closed-form and exhaustive counts")
    k.add_argument("what", choices=["stammering", "partial", "empty-to", "to-empty"] + list(kinds.KINDS[1:]))
    k.add_argument("n", type=int)
    k.add_argument("--k", type=int, help="number of dots (partial)")
    k.add_argument("--shape", help="partition λ, as JSON [2,1] or digits 21")
    k.add_argument("--mu", help="start partition (stammering)")
    k.add_argument("--nu", help="end partition (stammering)")
    k.add_argument("--brute", action="store_true", help="also count by enumeration and compare")
    k.set_defaults(run=cmd_count)

    a = sub.add_parser("ansatz", parents=[common], help="normal forms, state weights and Z_N")
    a.add_argument("what", choices=["normal-order", "prob", "partition"])
    a.add_argument("arg", help="word over E/F, state over x/o, or N")
    a.add_argument("--at", metavar="Q,A,B", help="evaluate at rationals, e.g. 1,1,1 or 1/2,2,3")
    a.set_defaults(run=cmd_ansatz)

    r = sub.add_parser("render", parents=[common], help="draw an object as text or SVG")
    r.add_argument("kind", choices=kinds.KINDS)
    r.add_argument("object", nargs="?")
    r.add_argument("--input", metavar="FILE")
    r.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    r.add_argument("--view", choices=render.VIEWS, default="default")
    r.set_defaults(run=cmd_render)
    return p


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout text, stderr text)."""
    try:
        args, extra = build_parser().parse_known_args(argv)
        # an inline object given after an option lands in the leftovers
        if len(extra) == 1 and getattr(args, "object", "") is None and not extra[0].startswith("--"):
            args.object = extra[0]
        elif extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        code, out = args.run(args)
    except UsageError as exc:
        return EXIT_USAGE, "", f"stammerlab: usage error: {exc}\n"
    except (kinds.KindError, ValueError) as exc:
        return EXIT_FAIL, "", f"stammerlab: {exc}\n"
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
        out = ""
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    try:
        code, out, err = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
