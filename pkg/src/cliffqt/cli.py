"""Command-line front door.

Usage:
    cliffqt mul --sig 3,0 "e12" "e13"
    cliffqt classify --sig 4,0 "1 + e1234"
    cliffqt project --sig 3,1 2 "e12 + e1"
    cliffqt tables comm
    cliffqt infer 'let x:1; let y:3; {x,y}'
    cliffqt check --sig 2,2 --trials 200 'rev(x)*x'
    cliffqt selftest --max-n 5

Global flags: --field real|complex, --backend exact|float, --seed N,
--trials N, --density X, --json.  CLIFFQT_SEED overrides the default seed.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import COMPLEX, EXACT, FLOAT, REAL, Signature
from .dsl import check_soundness, infer_type, parse_program
from .errors import AlgebraError, ParseError
from .mvtext import format_mv, mv_to_dict, parse_mv
from .qtype import (
    TypeSet,
    _ACOMM_MAIN,
    _COMM_MAIN,
    classify_by_rank,
    qtype_project,
)
from . import verify

_TABLES = {
    "comm": ("commutator", _COMM_MAIN),
    "commutator": ("commutator", _COMM_MAIN),
    "acomm": ("anticommutator", _ACOMM_MAIN),
    "anticommutator": ("anticommutator", _ACOMM_MAIN),
}


def _default_seed() -> int:
    try:
        return int(os.environ.get("CLIFFQT_SEED", "0"))
    except ValueError:
        return 0


def _parse_sig(text: str) -> Signature:
    try:
        p, q = (int(part) for part in text.split(","))
        return Signature(p, q)
    except (ValueError, AlgebraError) as exc:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}: {exc}") from None


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=(REAL, COMPLEX), default=REAL)
    common.add_argument("--backend", choices=(EXACT, FLOAT), default=EXACT)
    common.add_argument("--seed", type=int, default=None,
                        help="default 0, or CLIFFQT_SEED when set")
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--density", type=float, default=None)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="cliffqt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="geometric product of two literals")
    p.add_argument("--sig", type=_parse_sig, required=True, metavar="P,Q")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("classify", parents=[common], help="quaternion type of a literal")
    p.add_argument("--sig", type=_parse_sig, required=True, metavar="P,Q")
    p.add_argument("mv")

    p = sub.add_parser("project", parents=[common], help="main-type component of a literal")
    p.add_argument("--sig", type=_parse_sig, required=True, metavar="P,Q")
    p.add_argument("k", type=int, choices=(0, 1, 2, 3))
    p.add_argument("mv")

    p = sub.add_parser("tables", parents=[common], help="print a closure table")
    p.add_argument("op", choices=sorted(_TABLES))

    p = sub.add_parser("infer", parents=[common], help="abstract type of a DSL program")
    p.add_argument("program")

    p = sub.add_parser("check", parents=[common], help="randomized soundness check")
    p.add_argument("--sig", type=_parse_sig, required=True, metavar="P,Q")
    p.add_argument("program")

    p = sub.add_parser("selftest", parents=[common], help="oracle sweep and table derivation")
    p.add_argument("--max-n", type=int, default=5)
    return parser


def cmd_mul(args) -> int:
    lhs = parse_mv(args.lhs, args.sig, args.field, args.backend)
    rhs = parse_mv(args.rhs, args.sig, args.field, args.backend)
    result = lhs * rhs
    _emit(args, {"command": "mul", "result": mv_to_dict(result)}, format_mv(result))
    return 0


def cmd_classify(args) -> int:
    from fractions import Fraction

    u = parse_mv(args.mv, args.sig, args.field, args.backend)
    tset = classify_by_rank(u)
    components = []
    lines = [str(tset)]
    half = 0.5 if args.backend == FLOAT else Fraction(1, 2)
    for k in range(4):
        part = qtype_project(u, k)
        if args.field == COMPLEX:
            conj = part.complex_conjugate()
            pieces = (
                (str(k), (part + conj).scale(half)),
                (f"i{k}", (part - conj).scale(half)),
            )
        else:
            pieces = ((str(k), part),)
        for atom, piece in pieces:
            if not piece.is_zero():
                components.append({"atom": atom, "part": mv_to_dict(piece)})
                lines.append(f"  {atom}: {format_mv(piece)}")
    _emit(
        args,
        {"command": "classify", "typeset": str(tset), "components": components},
        "\n".join(lines),
    )
    return 0


def cmd_project(args) -> int:
    u = parse_mv(args.mv, args.sig, args.field, args.backend)
    part = qtype_project(u, args.k)
    _emit(args, {"command": "project", "k": args.k, "result": mv_to_dict(part)}, format_mv(part))
    return 0


def cmd_tables(args) -> int:
    name, table = _TABLES[args.op]
    rows = [[str(table[k1][k2]) for k2 in range(4)] for k1 in range(4)]
    lines = [f"{name} closure table (row op column):", "     0  1  2  3"]
    for k1 in range(4):
        lines.append(f"  {k1}: " + "  ".join(rows[k1]))
    _emit(args, {"command": "tables", "op": name, "rows": rows}, "\n".join(lines))
    return 0


def cmd_infer(args) -> int:
    env, expr = parse_program(args.program, args.field)
    tset = infer_type(expr, env)
    _emit(args, {"command": "infer", "program": args.program, "typeset": str(tset)}, str(tset))
    return 0


def cmd_check(args) -> int:
    if args.trials < 1:
        raise AlgebraError(f"trials must be >= 1, got {args.trials}")
    env, expr = parse_program(args.program, args.field)
    report = check_soundness(
        expr,
        env,
        args.sig,
        trials=args.trials,
        seed=args.seed,
        backend=args.backend,
        density=args.density,
    )
    _emit(args, {"command": "check", **report.as_dict()}, report.format_text())
    return 0 if report.passed else 1


def cmd_selftest(args) -> int:
    if not 1 <= args.max_n <= 8:
        raise AlgebraError(f"--max-n must be in 1..8, got {args.max_n}")
    comm_report, acomm_report = verify.derive_tables(args.max_n)
    discrepancies = verify.oracle_sweep(args.max_n)
    audits = [verify.dimension_audit(sig) for sig in verify.signatures_up_to(args.max_n)]
    audits_ok = all(a.ok for a in audits)
    ok = comm_report.ok and acomm_report.ok and not discrepancies and audits_ok
    data = {
        "command": "selftest",
        "max_n": args.max_n,
        "tables": [comm_report.as_dict(), acomm_report.as_dict()],
        "oracle_discrepancies": discrepancies,
        "dimension_audits_ok": audits_ok,
        "ok": ok,
    }
    lines = [
        comm_report.format_text(),
        acomm_report.format_text(),
        f"blade product oracle sweep (n <= {args.max_n}): "
        f"{len(discrepancies)} discrepancies",
        f"dimension audits: {'ok' if audits_ok else 'FAILED'}",
        f"selftest: {'PASS' if ok else 'FAIL'}",
    ]
    _emit(args, data, "\n".join(lines))
    return 0 if ok else 1


_COMMANDS = {
    "mul": cmd_mul,
    "classify": cmd_classify,
    "project": cmd_project,
    "tables": cmd_tables,
    "infer": cmd_infer,
    "check": cmd_check,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", None) is None:
        args.seed = _default_seed()
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
