"""Command-line front end: ``omlab {check,sweep,sharpness,radius}``.

Exit codes: 0 success, 1 input or usage error, 2 a check expected to hold was violated.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .blocks import Block2x2, classify, partition
from .catalog import BlockSubject, PairSubject, get_check, registry, result_record
from .constants import CHECK_TOL, TOL_ENV_VAR
from .errors import NotApplicable, OmlabError, ParseError, UnknownCheck
from .io import (
    dumps,
    load_operator,
    matrix_to_json,
    read_json,
    write_csv,
)
from .linalg import imag_part, operator_norm, real_part
from .radius import numerical_radius, radius_2x2_real, radius_2x2_real_general
from .sampling import CLASSES, SampleSpec, sharpness_search, witness_record
from .sweep import run_sweep

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_tol(flag: Optional[float]) -> float:
    """``--tol`` wins over the environment variable, which wins over the default."""
    if flag is not None:
        tol = flag
    elif os.environ.get(TOL_ENV_VAR):
        raw = os.environ[TOL_ENV_VAR]
        try:
            tol = float(raw)
        except ValueError:
            raise UsageError(f"{TOL_ENV_VAR}={raw!r} is not a number") from None
    else:
        tol = CHECK_TOL
    if not (tol >= 0 and np.isfinite(tol)):
        raise UsageError(f"tolerance must be a finite nonnegative number, got {tol!r}")
    return tol


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "NO"
    return f"{v:.10g}"


def print_table(rows: list[dict], out=None) -> None:
    out = out or sys.stdout
    header = ("id", "lhs", "rhs", "slack", "holds")
    cells = [header] + [
        (
            r["id"],
            _fmt(r["lhs"]),
            _fmt(r["rhs"]),
            _fmt(r["slack"]),
            _fmt(r["holds"]) if r["applicable"] else "n/a",
        )
        for r in rows
    ]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    for c in cells:
        print("  ".join(s.ljust(w) for s, w in zip(c, widths)).rstrip(), file=out)


def _write_report(report: dict, out: Optional[str], records: Optional[list] = None) -> None:
    if not out:
        return
    path = Path(out)
    if path.suffix.lower() == ".csv":
        write_csv(records if records is not None else [], path)
    else:
        path.write_text(dumps(report))


def _selected(ineq: str):
    if ineq == "all":
        return list(registry())
    return [get_check(ineq)]


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    tol = resolve_tol(args.tol)
    obj = read_json(args.input)
    op = load_operator(obj)
    if isinstance(op, Block2x2):
        block, matrix = op, op.assemble()
    else:
        matrix = op
        if matrix.shape[0] != matrix.shape[1]:
            raise ParseError("input", f"matrix must be square, got {matrix.shape[0]}x{matrix.shape[1]}")
        block = partition(matrix) if args.block else None

    checks = _selected(args.ineq)
    if block is None and args.ineq != "all" and not checks[0].whole_matrix:
        raise UsageError(f"{args.ineq} needs a 2x2 block partition; pass --block or a block object")

    whole = BlockSubject(block, tol=tol) if block is not None else BlockSubject.whole(matrix, tol=tol)
    pair = PairSubject(block.t11, block.t12, tol=tol) if block is not None else None

    records, violations, probe_violations = [], [], []
    for c in checks:
        if block is None and not c.whole_matrix:
            continue
        subject = pair if c.kind == "pair" else whole
        rec = result_record(c, subject)
        rec["expected_falsifiable"] = c.expected_falsifiable
        records.append(rec)
        if rec["applicable"] and not rec["holds"]:
            (probe_violations if c.expected_falsifiable else violations).append(c.id)

    print_table(records)
    report = {
        "command": "check",
        "input": str(args.input),
        "block": block is not None,
        "tol": tol,
        "dim": int(matrix.shape[0]),
        "class": classify(matrix, tol).as_dict(),
        "results": records,
        "violations": violations,
        "probe_violations": probe_violations,
    }
    _write_report(report, args.out, records)
    if violations:
        print(f"violated: {', '.join(violations)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args) -> int:
    tol = resolve_tol(args.tol)
    checks = None if args.ineq == "all" else [get_check(args.ineq)]
    rep = run_sweep(args.kind, args.n, args.trials, args.seed, checks=checks, tol=tol)
    rows = []
    for s in rep.stats.values():
        rows.append(
            {
                "id": s.id + (" (probe)" if s.expected_falsifiable else ""),
                "applicable": s.evaluations > 0,
                "lhs": None,
                "rhs": None,
                "slack": s.min_slack if s.evaluations else None,
                "holds": s.violations == 0,
            }
        )
    header = f"class={args.kind} n={args.n} trials={args.trials} seed={args.seed}  (slack = min over trials)"
    print(header)
    print_table(rows)
    for pid, count in rep.probe_violations.items():
        print(f"probe {pid}: {count} violation(s)")
    report = rep.as_dict()
    csv_rows = [
        {**s.as_dict(), "worst": None} for s in rep.stats.values()
    ]
    if args.out and Path(args.out).suffix.lower() == ".csv":
        cols = ("id", "paper_location", "expected_falsifiable", "evaluations", "applicable_samples",
                "violations", "min_slack", "mean_slack", "min_rel_slack")
        write_csv(csv_rows, args.out, cols)
    else:
        _write_report(report, args.out)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_sharpness(args) -> int:
    if args.ineq == "all":
        raise UsageError("sharpness searches one check at a time; pass --ineq ID")
    spec = SampleSpec(args.kind, args.n, seed=args.seed)
    try:
        res = sharpness_search(args.ineq, spec, restarts=args.restarts, iterations=args.iters)
    except NotApplicable as exc:
        print(f"{exc}", file=sys.stderr)
        report = {"command": "sharpness", "id": args.ineq, "class": args.kind, "applicable": False}
        _write_report(report, args.out)
        return EXIT_OK
    rec = witness_record(res)
    if isinstance(res.witness, tuple):
        witness = {"t1": matrix_to_json(res.witness[0]), "t2": matrix_to_json(res.witness[1])}
    else:
        witness = matrix_to_json(res.witness)
    print(f"{res.check_id}: best slack {res.slack:.10g} (lhs {res.result.lhs:.10g}, "
          f"rhs {res.result.rhs:.10g}) from restart {res.restart}")
    report = {"command": "sharpness", **rec, "witness": witness}
    _write_report(report, args.out, [rec])
    return EXIT_OK


def cmd_radius(args) -> int:
    op = load_operator(read_json(args.input))
    m = op.assemble() if isinstance(op, Block2x2) else op
    if m.shape[0] != m.shape[1]:
        raise ParseError("input", f"matrix must be square, got {m.shape[0]}x{m.shape[1]}")
    cls = classify(m)
    w = numerical_radius(m)
    rows = [
        ("omega(T)", w),
        ("||T||", operator_norm(m)),
        ("||Re T||", operator_norm(real_part(m))),
        ("||Im T||", operator_norm(imag_part(m))),
    ]
    report: dict = {"command": "radius", "omega": w, "norm": rows[1][1],
                    "norm_re": rows[2][1], "norm_im": rows[3][1]}
    if m.shape == (2, 2) and not np.any(m.imag):
        a, b, c, d = (float(x) for x in m.real.ravel())
        closed = radius_2x2_real(a, b, c, d)
        rows += [("closed form", closed), ("|omega - closed form|", abs(w - closed))]
        ellipse = radius_2x2_real_general(a, b, c, d)
        rows += [("ellipse form", ellipse), ("|omega - ellipse form|", abs(w - ellipse))]
        report.update(closed_form=closed, closed_form_diff=abs(w - closed),
                      ellipse_form=ellipse, ellipse_form_diff=abs(w - ellipse))
    flags = cls.as_dict()
    names = ("hermitian", "positive", "accretive", "dissipative", "accretive_dissipative")
    width = max(len(k) for k in [k for k, _ in rows] + list(names))
    for k, v in rows:
        print(f"{k.ljust(width)}  {v:.17g}")
    for k in names:
        print(f"{k.ljust(width)}  {'yes' if flags[k] else 'no'}")
    report["class"] = flags
    _write_report(report, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlab", description="Check norm and numerical radius inequalities for 2x2 operator matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate checks on one matrix")
    p.add_argument("--input", required=True, metavar="PATH", help="Matrix JSON or Block JSON")
    p.add_argument("--block", action="store_true", help="partition a full even-dimension matrix into 2x2 blocks")
    p.add_argument("--ineq", default="all", metavar="ID", help="check id or 'all' (default)")
    p.add_argument("--tol", type=float, default=None, help=f"tolerance (default ${TOL_ENV_VAR} or {CHECK_TOL:g})")
    p.add_argument("--out", metavar="PATH", help="report path (.json or .csv)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="run checks on seeded random samples")
    p.add_argument("--class", dest="kind", required=True, choices=CLASSES)
    p.add_argument("--n", type=int, default=2, help="block dimension (matrices are 2n x 2n)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ineq", default="all", metavar="ID")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sharpness", help="search for an input minimising one check's slack")
    p.add_argument("--ineq", required=True, metavar="ID")
    p.add_argument("--class", dest="kind", required=True, choices=CLASSES)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("radius", help="numerical radius, norms and class of one matrix")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_radius)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("n", "trials", "restarts", "iters"):
        v = getattr(args, name, None)
        if v is not None and v < (1 if name == "n" else 0):
            print(f"error: --{name} must be {'positive' if name == 'n' else 'nonnegative'}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except (ParseError, UsageError, UnknownCheck, OmlabError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
