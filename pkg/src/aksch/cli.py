"""Command-line front end: ``aksch <subcommand> [flags]``.

Exit codes: 0 success, 1 a golden check failed, 2 bad flags, 3 the request
falls outside the regime a computation supports (the error is printed as a
JSON object).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import __version__
from .blocks import block_partition, find_block, morita_reduction
from .cache import EnumerationCache, cache_key
from .combinatorics import enumerate_multipartitions, to_json
from .errors import AkschError
from .grading import LevelComposition, graded_dim_check
from .jantzen import PURE, ModularConfig, decomposition_matrix, jantzen_table
from .worked_examples import worked_examples
from .parameters import INFINITY, ParameterSet, classify, classify_multi_orbit, json_number, \
    one_parameter_report, parse_e
from .quiver import construct
from .tableaux import count_semistandard_all_types, count_standard, default_bounds


class FlagError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _e(text: str):
    try:
        return parse_e(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FlagError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--no-cache", action="store_true", help="recompute enumerations")
    common.add_argument("--cache-dir", help="cache directory (default: $AKSCH_CACHE_DIR)")

    params = _Parser(add_help=False)
    params.add_argument("--n", type=int, required=True)
    params.add_argument("--r", type=int)
    params.add_argument("--e", type=_e)
    params.add_argument("--f", type=_ints)
    params.add_argument("--char", type=int, default=0)
    params.add_argument("--q-one", action="store_true", help="q = Q_1 = ... = Q_r = 1")

    modular = _Parser(add_help=False)
    modular.add_argument("--content", type=_ints, help="residue content of one block")
    modular.add_argument("--deform-exponents", type=_ints)
    modular.add_argument("--pure", type=int, action="append", default=[],
                         help="1-based component left undeformed (repeatable)")
    modular.add_argument("--q-deform", type=int)
    modular.add_argument("--truncation", type=int)

    parser = _Parser(prog="aksch", description="Representation type of cyclotomic Hecke and "
                                               "q-Schur algebras")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--e", type=_e)
    p.add_argument("--f", type=_ints)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--q-one", action="store_true")
    p.add_argument("--one-parameter", action="store_true",
                   help="compare bounds for Q = (1, q^(e/r-1), ...); needs --e and --r")

    p = sub.add_parser("orbits", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=_e)
    p.add_argument("--orbit", type=_ints, action="append", required=True,
                   help="exponents of one orbit (repeatable)")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--q-one", action="store_true")

    sub.add_parser("blocks", parents=[common, params])
    p = sub.add_parser("jantzen", parents=[common, params, modular])
    p = sub.add_parser("decompose", parents=[common, params, modular])

    p = sub.add_parser("dims", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=_ints)

    p = sub.add_parser("grading", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=_ints)
    p.add_argument("--p", type=_ints, required=True, help="level composition r_1,...,r_g")
    p.add_argument("--epsilon", type=_ints, required=True)

    p = sub.add_parser("quiver", parents=[common])
    p.add_argument("--m", type=int, required=True)

    sub.add_parser("paper-examples", parents=[common])
    return parser


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise FlagError(f"{args.command}: missing {', '.join(missing)}")


def _parameters(args) -> ParameterSet:
    if args.n is not None and args.n < 0:
        raise FlagError("--n must be non-negative")
    if args.q_one:
        if args.f is None:
            _need(args, "r")
            f = (0,) * args.r
        else:
            f = args.f
        e = args.e if args.e is not None else INFINITY
    else:
        _need(args, "e", "f")
        e, f = args.e, args.f
    if args.r is not None and args.r != len(f):
        raise FlagError(f"--r {args.r} does not match {len(f)} exponents in --f")
    try:
        return ParameterSet(e, f, args.char, args.q_one)
    except ValueError as exc:
        raise FlagError(str(exc))


def _config(args, r: int) -> ModularConfig:
    deform = list(args.deform_exponents) if args.deform_exponents is not None \
        else [2 * k for k in range(1, r + 1)]
    if len(deform) != r:
        raise FlagError(f"--deform-exponents needs {r} values")
    for k in args.pure:
        if not 1 <= k <= r:
            raise FlagError(f"--pure {k} out of range 1..{r}")
        deform[k - 1] = PURE
    try:
        return ModularConfig(tuple(deform), args.q_deform, args.truncation)
    except ValueError as exc:
        raise FlagError(str(exc))


def _blocks(args, p: ParameterSet):
    if args.content is not None:
        try:
            return [find_block(args.n, p, args.content)]
        except ValueError as exc:
            raise FlagError(str(exc))
    return block_partition(args.n, p.r, p)


def cmd_classify(args, cache):
    if args.one_parameter:
        _need(args, "e", "r")
        if args.e is INFINITY or args.e % args.r:
            raise FlagError("--one-parameter needs r dividing a finite e")
        return one_parameter_report(args.e, args.r).to_json()
    _need(args, "n")
    p = _parameters(args)
    return {"n": args.n, "parameters": p.to_json(), **classify(args.n, p).to_json()}


def cmd_orbits(args, cache):
    if args.n < 0:
        raise FlagError("--n must be non-negative")
    e = args.e if args.e is not None else INFINITY
    if not args.q_one:
        _need(args, "e")
    try:
        orbits = [ParameterSet(e, f, args.char, args.q_one) for f in args.orbit]
    except ValueError as exc:
        raise FlagError(str(exc))
    v = classify_multi_orbit(args.n, orbits)
    return {"n": args.n, "e": json_number(e), "orbits": [list(o.f) for o in orbits], **v.to_json()}


def cmd_blocks(args, cache):
    p = _parameters(args)
    blocks = block_partition(args.n, p.r, p)
    out = []
    verdict = classify(args.n, p)
    for b in blocks:
        entry = b.to_json()
        if p.r >= 3 and verdict.kind.is_finite and not p.q_is_one:
            entry["morita"] = morita_reduction(b, p).to_json()
        out.append(entry)
    return {"n": args.n, "parameters": p.to_json(), "kind": verdict.kind.value,
            "sizes": [len(b) for b in blocks], "blocks": out}


def cmd_jantzen(args, cache):
    p = _parameters(args)
    cfg = _config(args, p.r)
    tables = []
    for b in _blocks(args, p):
        tables.append({"content": list(b.content), **jantzen_table(b, p, cfg).to_json()})
    return {"n": args.n, "parameters": p.to_json(), "config": cfg.to_json(args.n), "blocks": tables}


def cmd_decompose(args, cache):
    p = _parameters(args)
    cfg = _config(args, p.r)
    out = []
    for b in _blocks(args, p):
        out.append({"content": list(b.content), **decomposition_matrix(b, p, cfg).to_json()})
    return {"n": args.n, "parameters": p.to_json(), "blocks": out}


def dims_report(n: int, r: int, m: Sequence[int]) -> dict:
    cells = []
    for lam in enumerate_multipartitions(n, r):
        cells.append({"lambda": to_json(lam), "standard": count_standard(lam),
                      "semistandard": count_semistandard_all_types(lam, m)})
    return {"n": n, "r": r, "m": list(m),
            "dimHecke": sum(c["standard"] ** 2 for c in cells),
            "dimSchur": sum(c["semistandard"] ** 2 for c in cells),
            "cells": cells}


def cmd_dims(args, cache):
    if args.n < 0 or args.r < 1:
        raise FlagError("need n >= 0 and r >= 1")
    m = args.m if args.m is not None else default_bounds(args.n, args.r)
    if len(m) != args.r or any(x < 1 for x in m):
        raise FlagError(f"--m needs {args.r} positive bounds")
    if cache is None:
        return dims_report(args.n, args.r, m)
    return cache.fetch(cache_key("dims", args.n, args.r, m), lambda: dims_report(args.n, args.r, m))


def cmd_grading(args, cache):
    try:
        level = LevelComposition(args.p)
        return graded_dim_check(args.n, args.r, args.m, level, args.epsilon).to_json()
    except ValueError as exc:
        raise FlagError(str(exc))


def cmd_quiver(args, cache):
    if args.m < 1:
        raise FlagError("--m must be at least 1")
    return construct(args.m).to_json()


def cmd_worked_examples(args, cache):
    items = [it.to_json() for it in worked_examples()]
    return {"items": items, "pass": all(it["pass"] for it in items)}


COMMANDS = {"classify": cmd_classify, "orbits": cmd_orbits, "blocks": cmd_blocks,
            "jantzen": cmd_jantzen, "decompose": cmd_decompose, "dims": cmd_dims,
            "grading": cmd_grading, "quiver": cmd_quiver, "paper-examples": cmd_worked_examples}


def _render_table(value, indent: str = "") -> list[str]:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if _is_matrix(v):
                lines.append(f"{indent}{k}:")
                width = max(len(str(x)) for row in v for x in row) if any(v) else 1
                lines += [indent + "  " + " ".join(str(x).rjust(width) for x in row) for row in v]
            elif _has_dict(v):
                lines.append(f"{indent}{k}:")
                lines += _render_table(v, indent + "  ")
            else:
                lines.append(f"{indent}{k}: {_flat(v)}")
        return lines
    if isinstance(value, list) and _has_dict(value):
        lines = []
        for v in value:
            sub = _render_table(v, indent + "  ")
            lines.append(indent + "- " + sub[0].lstrip())
            lines += sub[1:]
        return lines
    return [f"{indent}{_flat(value)}"]


def _is_matrix(v) -> bool:
    return isinstance(v, list) and bool(v) and all(
        isinstance(row, list) and row and all(type(x) is int for x in row) for row in v)


def _has_dict(v) -> bool:
    if isinstance(v, dict):
        return True
    return isinstance(v, list) and any(_has_dict(x) for x in v)


def _flat(v) -> str:
    return json.dumps(v) if isinstance(v, (list, dict)) else str(v)


def render(result, fmt: str) -> str:
    if fmt == "table":
        return "\n".join(_render_table(result))
    return json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False)


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cache = None if args.no_cache else EnumerationCache(args.cache_dir)
        result = COMMANDS[args.command](args, cache)
    except FlagError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except AkschError as exc:
        print(json.dumps({"error": str(exc)}), file=out)
        return 3
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    print(render(result, args.format), file=out)
    if args.command == "paper-examples" and not result["pass"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
