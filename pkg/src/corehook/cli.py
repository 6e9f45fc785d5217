"""Command-line interface.

Exit codes: 0 success, 1 usage or validation error, 2 infinite family
(gcd(s,t) > d), 3 formula/oracle mismatch in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import render
from .core_poset import CoreParams, bottom_edge, gap_poset, ledge, ledge_length_formula
from .errors import DegenerateParametersError, InfiniteFamilyError
from .maxhook import max_hook_general, witness_core
from .oracle import enumerate_d_distinct_cores, oracle_max_hook

EXIT_OK, EXIT_USAGE, EXIT_INFINITE, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _core_args(p: argparse.ArgumentParser, with_d: bool = True) -> None:
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    if with_d:
        p.add_argument("d", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corehook", description="Maximum hook length of d-distinct (s,t)-cores.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [
        ("maxhook", "closed-form maximum hook length"),
        ("witness", "a core attaining the maximum"),
        ("verify", "compare the closed form with brute force"),
        ("enumerate", "list every d-distinct (s,t)-core beta-set"),
    ]:
        _core_args(sub.add_parser(name, help=help_))
    _core_args(sub.add_parser("info", help="gap poset, bottom edge and ledges"), with_d=False)
    p = sub.add_parser("render", help="ASCII Young diagram or DOT diagrams")
    p.add_argument("target", choices=("young", "hasse", "edge"))
    _core_args(p)
    p.add_argument("--out", type=Path, default=None)
    return parser


def _emit(args, payload: dict, text: str) -> None:
    print(_dump(payload) if args.format == "json" else text)


def cmd_maxhook(args) -> int:
    r = max_hook_general(args.s, args.t, args.d)
    payload = {
        "s": args.s, "t": args.t, "d": args.d, "H": r.H, "case": r.case_tag,
        "B": r.B, "s_bar": r.s_bar, "s_tilde": r.s_tilde,
    }
    text = f"H={r.H} case={r.case_tag}"
    if r.B is not None:
        text += f" B={r.B} s_bar={r.s_bar} s_tilde={r.s_tilde}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_witness(args) -> int:
    beta, parts = witness_core(args.s, args.t, args.d)
    H = max(beta)
    beta_desc = sorted(beta, reverse=True)
    payload = {"s": args.s, "t": args.t, "d": args.d, "H": H, "beta": beta_desc, "witness": list(parts)}
    text = f"H={H}\nbeta={beta_desc}\npartition={list(parts)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    formula = max_hook_general(args.s, args.t, args.d)
    report = oracle_max_hook(args.s, args.t, args.d)
    base = {"s": args.s, "t": args.t, "d": args.d}
    if formula.H == report.H_true:
        _emit(args, {**base, "status": "OK", "H": formula.H, "case": formula.case_tag}, f"OK H={formula.H}")
        return EXIT_OK
    payload = {
        **base, "status": "MISMATCH", "case": formula.case_tag,
        "formula_H": formula.H, "oracle_H": report.H_true, "scanned_up_to": report.scanned_up_to,
    }
    _emit(
        args,
        payload,
        f"MISMATCH formula H={formula.H} ({formula.case_tag}) oracle H={report.H_true}",
    )
    return EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    if args.d < 0:
        raise ValueError("d must be nonnegative")
    cores = [sorted(b, reverse=True) for b in enumerate_d_distinct_cores(args.s, args.t, args.d)]
    payload = {"s": args.s, "t": args.t, "d": args.d, "count": len(cores), "cores": cores}
    text = "\n".join([f"count={len(cores)}"] + ["{" + ",".join(map(str, c)) + "}" for c in cores])
    _emit(args, payload, text)
    return EXIT_OK


def _coprime_params(s: int, t: int) -> CoreParams:
    if not 2 <= s < t:
        raise ValueError(f"need 2 <= s < t, got s={s}, t={t}")
    if math.gcd(s, t) != 1:
        raise ValueError(f"s={s} and t={t} are not coprime")
    return CoreParams.from_st(s, t)


def cmd_info(args) -> int:
    params = _coprime_params(args.s, args.t)
    poset = gap_poset(params)
    edge = bottom_edge(params)
    ledges = []
    for i in range(params.k):
        members = sorted(ledge(i, params).members)
        ledges.append({
            "residue": i, "members": members,
            "formula": ledge_length_formula(i, params), "enumerated": len(members),
        })
    payload = {
        "s": params.s, "t": params.t, "M": params.M, "size_P": len(poset),
        "E_order": list(edge.ordered), "ledges": ledges,
    }
    lines = [
        f"M={params.M}",
        f"|P|={len(poset)}",
        "E-order " + ",".join(map(str, edge.ordered)),
    ]
    for lg in ledges:
        lines.append(
            f"L_{lg['residue']}={{{','.join(map(str, lg['members']))}}} "
            f"formula={lg['formula']} enumerated={lg['enumerated']}"
        )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        beta, parts = witness_core(args.s, args.t, args.d)
    except InfiniteFamilyError as exc:
        raise ValueError(f"cannot render: {exc}") from exc
    if args.target == "young":
        out = render.young_ascii(parts)
    else:
        params = _coprime_params(args.s, args.t)
        draw = render.hasse_dot if args.target == "hasse" else render.edge_dot
        out = draw(params, beta)
    if args.out is not None:
        args.out.write_text(out + "\n", encoding="utf-8")
    else:
        print(out)
    return EXIT_OK


COMMANDS = {
    "maxhook": cmd_maxhook,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "info": cmd_info,
    "render": cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except InfiniteFamilyError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INFINITE
    except (ValueError, DegenerateParametersError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
