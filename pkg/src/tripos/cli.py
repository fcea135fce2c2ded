"""Command-line interface.

Machine-readable JSON goes to stdout (deterministic key order; the timing
field is the only part that varies between identical runs); a short human
summary goes to stderr.  Exit status: 0 all properties hold, 1 at least one
property fails, 2 usage or input error, 3 a precondition gate made the run
inapplicable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import QPoly, parse_exact
from .conditions import (
    log_concavity_conditions,
    log_concavity_conditions_const,
    q_log_convexity_conditions,
    verify_tail_recurrence,
)
from .errors import FileFormatError, TriposError
from .oeis import fetch_bfile, reshape, resolve_cache_dir, trim_to_rows
from .properties import (
    HOLDS,
    INAPPLICABLE,
    NumSeq,
    PolySeq,
    PropertyReport,
    is_log_concave,
    is_strongly_q_log_concave,
    is_strongly_q_log_convex,
    is_tp_r,
)
from .transforms import check_preservation
from .triangles import (
    CoeffScheme,
    ConstParams,
    PRESET_NAMES,
    Triangle,
    build_preset,
    from_const_params,
    from_five_term,
    from_three_term,
    row_polys,
)

CHECK_NAMES = ("rows-log-concave", "rowgen-strong-qlcx", "rowgen-strong-qlcv", "tp")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripos",
        description="Generate combinatorial triangles and verify their "
        "log-concavity / q-log-convexity / total-positivity properties "
        "in exact arithmetic.",
    )
    parser.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a triangle and write it to a file")
    src = gen.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=PRESET_NAMES)
    src.add_argument("--params", metavar="a,b,g,e,f,g,h",
                     help="constant five-term weights alpha,beta,gamma,e,f,g,h")
    src.add_argument("--scheme-file", metavar="PATH", help="JSON coefficient scheme file")
    gen.add_argument("--s", type=_positive_int, default=None, help="s for the s_pascal preset")
    gen.add_argument("--n", type=int, required=True, help="largest row index to generate")
    gen.add_argument("--out", metavar="PATH", help="output path (default: stdout via report)")

    chk = sub.add_parser("check", help="run property checkers against a triangle")
    tgt = chk.add_mutually_exclusive_group(required=True)
    tgt.add_argument("--file", metavar="PATH", help="triangle file to check")
    tgt.add_argument("--oeis", metavar="ID", help="OEIS id to ingest (b-file)")
    tgt.add_argument("--preset", choices=PRESET_NAMES)
    chk.add_argument("--arity", type=int, default=None, help="row-width slope of the ingested triangle")
    chk.add_argument("--s", type=_positive_int, default=None)
    chk.add_argument("--n", type=int, default=None, help="rows to generate for a preset target")
    chk.add_argument("--tp-order", type=_positive_int, default=2, help="minor order for the tp check")
    chk.add_argument("--cache-dir", metavar="DIR", default=None)
    chk.add_argument("--offline", action="store_true", help="never touch the network")
    chk.add_argument("checks", nargs="+", choices=CHECK_NAMES)

    cond = sub.add_parser("conditions", help="evaluate a sufficient-condition list")
    cond.add_argument("theorem", choices=("thm21", "cor22", "thm34"))
    cond.add_argument("--params", metavar="a,b,g,e,f,g,h",
                      help="constant weights (cor22 / thm34)")
    cond.add_argument("--schemes", metavar="PATH", help="JSON scheme file (thm21)")
    cond.add_argument("--k-max", type=int, default=30)
    cond.add_argument("--tail-recurrence", type=int, metavar="N", default=None,
                      help="also verify the tail-sum recurrence identity up to row N")

    tra = sub.add_parser("transform", help="apply the generalized binomial transform "
                                           "and check property preservation")
    tra.add_argument("polys", metavar="PATH", help="input file, one polynomial per line")
    tra.add_argument("--s", type=_positive_int, required=True)
    tra.add_argument("--n-max", type=int, default=None,
                     help="largest transformed index (default: all the input supports)")
    tra.add_argument("--direction", choices=("convex", "concave"), required=True)
    return parser


# -- input loading ---------------------------------------------------------------


def parse_const_params(text: str) -> ConstParams:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 7:
        raise FileFormatError(
            "--params needs 7 comma-separated values: alpha,beta,gamma,e,f,g,h"
        )
    try:
        vals = [parse_exact(p) for p in parts]
    except ValueError as exc:
        raise FileFormatError(f"bad --params value: {exc}") from exc
    try:
        return ConstParams(*vals)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc


def load_scheme_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FileFormatError(f"cannot read scheme file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"scheme file is not valid JSON: {exc}") from exc
    kind = data.get("kind")
    if kind not in ("three-term", "five-term"):
        raise FileFormatError("scheme file needs \"kind\": \"three-term\" or \"five-term\"")
    wanted = ("f", "g") if kind == "three-term" else ("gamma", "e", "f", "g", "h")
    schemes = {}
    for name in wanted:
        if name not in data:
            raise FileFormatError(f"scheme file is missing the {name!r} scheme")
        schemes[name] = CoeffScheme.from_dict(data[name])
    return {"kind": kind, **schemes}


def load_poly_file(path: str) -> PolySeq:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(f"cannot read polynomial file: {exc}") from exc
    polys = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            polys.append(QPoly(parse_exact(tok) for tok in line.split()))
        except ValueError as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from exc
    if not polys:
        raise FileFormatError("polynomial file contains no polynomials")
    return PolySeq(tuple(polys))


def load_triangle_file(path: str) -> Triangle:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FileFormatError(f"cannot read triangle file: {exc}") from exc
    return Triangle.parse(text)


# -- command handlers --------------------------------------------------------------


def _triangle_reports(t: Triangle, checks: list[str], tp_order: int) -> list[PropertyReport]:
    reports = []
    for check in checks:
        if check == "rows-log-concave":
            verdict = PropertyReport("rows-log-concave", (0, t.n_max), HOLDS)
            for n, row in enumerate(t.rows):
                r = is_log_concave(NumSeq(row))
                if not r.holds:
                    verdict = PropertyReport(
                        "rows-log-concave", (0, t.n_max), r.verdict,
                        witness={"row": n, **(r.witness or {})}, note=r.note,
                    )
                    break
            reports.append(verdict)
        elif check == "rowgen-strong-qlcx":
            reports.append(is_strongly_q_log_convex(PolySeq(tuple(row_polys(t)))))
        elif check == "rowgen-strong-qlcv":
            reports.append(is_strongly_q_log_concave(PolySeq(tuple(row_polys(t)))))
        elif check == "tp":
            size = t.n_max + 1
            reports.append(is_tp_r(t.to_matrix(size, size), tp_order))
    return reports


def _cmd_generate(args) -> tuple[dict, list[dict], int]:
    if args.preset:
        t = build_preset(args.preset, args.n, s=args.s)
        source = {"preset": args.preset, "s": args.s}
    elif args.params:
        t = from_const_params(parse_const_params(args.params), args.n)
        source = {"params": args.params}
    else:
        schemes = load_scheme_file(args.scheme_file)
        if schemes["kind"] == "three-term":
            t = from_three_term(schemes["f"], schemes["g"], args.n)
        else:
            t = from_five_term(
                schemes["gamma"], schemes["e"], schemes["f"], schemes["g"],
                schemes["h"], args.n,
            )
        source = {"scheme_file": args.scheme_file}
    serialized = t.serialize()
    if args.out:
        Path(args.out).write_text(serialized)
    inputs = {**source, "n_max": args.n, "out": args.out}
    body = {"triangle": None if args.out else serialized.splitlines()}
    return inputs, [body], 0


def _cmd_check(args) -> tuple[dict, list[dict], int]:
    if args.file:
        t = load_triangle_file(args.file)
        target = {"file": args.file}
    elif args.oeis:
        if args.arity is None:
            raise FileFormatError("--oeis needs --arity to reshape the b-file")
        b = fetch_bfile(args.oeis, cache_dir=args.cache_dir, offline=args.offline)
        trimmed = trim_to_rows(b, args.arity)
        t = reshape(trimmed, args.arity)
        target = {"oeis": args.oeis, "arity": args.arity,
                  "entries_used": len(trimmed.entries),
                  "entries_fetched": len(b.entries),
                  "cache_dir": str(resolve_cache_dir(args.cache_dir))}
    else:
        if args.n is None:
            raise FileFormatError("--preset needs --n (rows to generate)")
        t = build_preset(args.preset, args.n, s=args.s)
        target = {"preset": args.preset, "s": args.s, "n_max": args.n}
    reports = _triangle_reports(t, args.checks, args.tp_order)
    inputs = {**target, "checks": list(args.checks), "tp_order": args.tp_order}
    code = 0
    if any(r.verdict == INAPPLICABLE for r in reports):
        code = 3
    if any(not r.holds and r.verdict != INAPPLICABLE for r in reports):
        code = 1
    return inputs, [r.to_dict() for r in reports], code


def _cmd_conditions(args) -> tuple[dict, list[dict], int]:
    reports: list[dict] = []
    if args.theorem == "thm21":
        if not args.schemes:
            raise FileFormatError("conditions thm21 needs --schemes (five-term scheme file)")
        schemes = load_scheme_file(args.schemes)
        if schemes["kind"] != "five-term":
            raise FileFormatError("thm21 takes a five-term scheme file")
        report = log_concavity_conditions(
            schemes["gamma"], schemes["e"], schemes["f"], schemes["g"],
            schemes["h"], args.k_max,
        )
        inputs = {"theorem": "thm21", "schemes": args.schemes, "k_max": args.k_max}
    else:
        if not args.params:
            raise FileFormatError(f"conditions {args.theorem} needs --params")
        params = parse_const_params(args.params)
        if args.theorem == "cor22":
            report = log_concavity_conditions_const(params)
        else:
            report = q_log_convexity_conditions(params)
        inputs = {"theorem": args.theorem, "params": args.params}
        if args.tail_recurrence is not None:
            identity = verify_tail_recurrence(params, args.tail_recurrence)
            inputs["tail_recurrence_n_max"] = args.tail_recurrence
            reports.append(identity.to_dict())
            if not identity.holds:
                reports.insert(0, report.to_dict())
                return inputs, reports, 1
    reports.insert(0, report.to_dict())
    return inputs, reports, 0 if report.established else 1


def _cmd_transform(args) -> tuple[dict, list[dict], int]:
    ps = load_poly_file(args.polys)
    n_max = args.n_max
    if n_max is None:
        n_max = (len(ps) - 1) // args.s
    report = check_preservation(ps, args.s, n_max, args.direction)
    inputs = {"polys": args.polys, "s": args.s, "n_max": n_max,
              "direction": args.direction}
    body = report.to_dict()
    if report.transformed is not None:
        body["transformed"] = [str(p) for p in report.transformed.polys]
    if report.verdict == HOLDS:
        code = 0
    elif report.verdict == INAPPLICABLE:
        code = 3
    else:
        code = 1
    return inputs, [body], code


_HANDLERS = {
    "generate": _cmd_generate,
    "check": _cmd_check,
    "conditions": _cmd_conditions,
    "transform": _cmd_transform,
}


def _summarize(reports: list[dict]) -> list[str]:
    lines = []
    for r in reports:
        if "verdict" in r:
            lines.append(f"{r.get('property', r.get('tag', 'report'))}: {r['verdict']}")
        elif "established" in r:
            state = "established" if r["established"] else "not established"
            lines.append(f"conditions {r['tag']}: {state}")
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        inputs, reports, code = _HANDLERS[args.command](args)
    except TriposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "artifact": {"name": "tripos", "version": __version__},
        "command": args.command,
        "inputs": inputs,
        "reports": reports,
        "exit_status": code,
        "timing_ms": round((time.perf_counter() - started) * 1000, 3),
    }
    text = json.dumps(payload, sort_keys=True, indent=2)
    print(text)
    if args.json:
        Path(args.json).write_text(text + "\n")
    for line in _summarize(reports):
        print(line, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
