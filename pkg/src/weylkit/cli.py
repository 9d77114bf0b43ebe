"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or guard error.
Weights are comma-separated integers in fundamental coordinates; words are
comma-separated 1-based simple indices.  With ``--format json`` the output
is stable byte-for-byte for identical inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import demazure as dz
from . import weyl_formula as wf
from .char_ring import Character
from .oracles import OracleError, tensor_decompose, weyl_dim
from .root_system import CartanError, WeylOrderGuardError, build, parse_label
from .verify import SUITES, run_suite
from .weyl_group import WeylGroup, parse_word, serialize_word

ENV_GUARD = "WEYLKIT_MAX_WEYL_ORDER"


class UsageError(Exception):
    pass


def _default_guard():
    raw = os.environ.get(ENV_GUARD, "").strip()
    return int(raw) if raw else 1_000_000


def _parse_weight(text, rank):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise UsageError(f"weight needs {rank} coordinates, got {len(parts)}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"malformed weight {text!r}") from exc


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _group(args) -> WeylGroup:
    rs = build(parse_label(args.type), max_weyl_order=args.max_weyl_order)
    return WeylGroup(rs)


def cmd_info(args):
    group = _group(args)
    rs = group.rs
    payload = {
        "type": str(rs.label),
        "rank": rs.rank,
        "positive_roots": len(rs.positive_roots),
        "weyl_order": len(group),
        "longest_length": group.longest.length,
        "longest_word": serialize_word(group.longest.word),
    }
    _emit(
        payload,
        args.format,
        [
            f"type {payload['type']}: rank {rs.rank}",
            f"positive roots: {payload['positive_roots']}",
            f"|W| = {payload['weyl_order']}",
            f"longest element: length {payload['longest_length']}, word {payload['longest_word']}",
        ],
    )
    return 0


def cmd_char(args):
    group = _group(args)
    rs = group.rs
    psi = _parse_weight(args.weight, rs.rank)
    warning = None if rs.is_dominant(psi) else "weight is not dominant; virtual character"
    chi = wf.gamma(group, Character.exponential(rs, psi))
    dim = chi.dimension()
    payload = {
        "type": str(rs.label),
        "weight": list(psi),
        "character": chi.to_dict(),
        "dimension": str(dim),
        "warning": warning,
    }
    if rs.is_dominant(psi):
        payload["weyl_dim"] = str(weyl_dim(rs, psi))
    lines = []
    if warning:
        lines.append(f"warning: {warning}")
    lines.append(f"character of weight {list(psi)} in {rs.label}: {len(chi)} distinct weights")
    lines.append(f"dimension: {dim}")
    if "weyl_dim" in payload:
        lines.append(f"weyl_dim cross-check: {payload['weyl_dim']}")
    lines.append(chi.to_json())
    _emit(payload, args.format, lines)
    return 0


def cmd_demazure(args):
    group = _group(args)
    rs = group.rs
    psi = _parse_weight(args.weight, rs.rank)
    word = parse_word(args.word, rs.rank)
    chi = dz.demazure_word(rs, word, Character.exponential(rs, psi))
    element = group.from_word(word)
    reduced = element.length == len(word)
    is_w0 = element == group.longest
    payload = {
        "type": str(rs.label),
        "word": [i + 1 for i in word],
        "weight": list(psi),
        "reduced": reduced,
        "reduces_to_longest": is_w0,
        "result": chi.to_dict(),
    }
    lines = [
        f"word {payload['word']} ({'reduced' if reduced else 'not reduced'}) on weight {list(psi)}",
    ]
    if is_w0 and rs.is_dominant(psi):
        matches = chi == wf.gamma(group, Character.exponential(rs, psi))
        payload["equals_weyl_character"] = matches
        lines.append(f"word reduces to the longest element; equals gamma: {matches}")
    lines.append(chi.to_json())
    _emit(payload, args.format, lines)
    return 0


def cmd_tensor(args):
    group = _group(args)
    rs = group.rs
    left = _parse_weight(args.left, rs.rank)
    right = _parse_weight(args.right, rs.rank)
    if not (rs.is_dominant(left) and rs.is_dominant(right)):
        raise UsageError("tensor factors must be dominant weights")
    decomp = tensor_decompose(group, left, right)
    items = [
        {"weight": list(mu), "mult": str(decomp[mu]), "dim": str(weyl_dim(rs, mu))}
        for mu in sorted(decomp)
    ]
    total = sum(decomp[mu] * weyl_dim(rs, mu) for mu in decomp)
    payload = {
        "type": str(rs.label),
        "left": list(left),
        "right": list(right),
        "summands": items,
        "dimension_balance": {
            "product": str(weyl_dim(rs, left) * weyl_dim(rs, right)),
            "sum": str(total),
        },
    }
    lines = [f"{list(left)} (x) {list(right)} in {rs.label}:"]
    for item in items:
        lines.append(f"  {item['weight']} x {item['mult']}  (dim {item['dim']})")
    lines.append(
        f"dimension balance: {payload['dimension_balance']['product']} = {payload['dimension_balance']['sum']}"
    )
    _emit(payload, args.format, lines)
    return 0


def cmd_verify(args):
    group = _group(args)
    reports = run_suite(group, args.suite, trials=args.trials, seed=args.seed, max_coord=args.max_coord)
    failures = sum(len(r.failures) for r in reports)
    payload = {
        "type": str(group.rs.label),
        "suite": args.suite,
        "seed": args.seed,
        "trials": args.trials,
        "reports": [r.to_dict() for r in reports],
        "failures": failures,
        "ok": failures == 0,
    }
    lines = []
    for r in reports:
        status = "ok" if r.passed else f"FAIL ({len(r.failures)} failures)"
        lines.append(f"{r.suite}: {r.trials} checks, {status}")
    lines.append("result: " + ("ok" if failures == 0 else "FAIL"))
    _emit(payload, args.format, lines)
    return 0 if failures == 0 else 1


def make_parser():
    def _common(target, top=False):
        # Accepted both before and after the subcommand; the subcommand copy
        # suppresses its default so it never clobbers a value parsed earlier.
        fmt_default = "text" if top else argparse.SUPPRESS
        guard_default = None if top else argparse.SUPPRESS
        target.add_argument("--format", choices=("text", "json"), default=fmt_default)
        target.add_argument(
            "--max-weyl-order",
            type=int,
            default=guard_default,
            help=f"guard on the Weyl group order (default 1000000; env {ENV_GUARD})",
        )
        return target

    common = _common(argparse.ArgumentParser(add_help=False))
    parser = _common(
        argparse.ArgumentParser(
            prog="weylkit", description="Exact Weyl/Demazure character calculus"
        ),
        top=True,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="rank, roots, group order, longest word", parents=[common])
    p.add_argument("--type", required=True)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser(
        "char", help="irreducible (or virtual) character of a weight", parents=[common]
    )
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("demazure", help="apply a word of Demazure operators", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("tensor", help="decompose a product of two irreducibles", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("verify", help="run a named identity suite", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-coord", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.max_weyl_order is None:
        args.max_weyl_order = _default_guard()
    try:
        return args.func(args)
    except (CartanError, UsageError, WeylOrderGuardError, OracleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
