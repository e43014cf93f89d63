"""Command-line interface.

Commands: product, expand, eval, verify, dual, index.  Exit codes form a
stable contract: 0 on success, 1 when an identity or a tolerance check
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .halg import helement_to_json
from .mzvnum import eval_combo
from .tshuffle import tshuffle_words
from .verify import DEFAULT_SEED, SUITES
from .words import (
    Index,
    Word,
    dual,
    index_from_word,
    parse_index,
    parse_word,
    word_from_index,
)
from .zeta import (
    expand_interpolation,
    interpolated_symbol,
    parse_zeta_combo,
    zeta_combo_to_json,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imzv",
        description="Deformed shuffle products on words and zeta value identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )

    p = sub.add_parser("product", help="deformed product of two words")
    p.add_argument("w1", help="first word over {x,y}, or 1 for the empty word")
    p.add_argument("w2", help="second word")
    add_format(p)

    p = sub.add_parser("expand", help="expand an interpolated symbol into plain ones")
    p.add_argument("index", help="admissible index, e.g. \"(2,1)\"")
    add_format(p)

    p = sub.add_parser("eval", help="evaluate a zeta combo numerically")
    p.add_argument("combo", help="combo such as \"2*z(2,2)+4*z(3,1)\" or \"zs(5,1)\"")
    p.add_argument("--t", default="0", help="rational value for t (default 0)")
    p.add_argument(
        "--tol", type=float, default=1e-6,
        help="absolute error target (default 1e-6, floor 1e-9)",
    )
    add_format(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES), help="suite name")
    p.add_argument("--max", type=int, default=None, help="generic grid bound")
    p.add_argument("--max-exp", type=int, default=None, help="exponent bound")
    p.add_argument("--r", type=int, default=None, help="first run-length bound")
    p.add_argument("--s", type=int, default=None, help="second run-length bound")
    p.add_argument("--k", type=int, default=None, help="single k value")
    p.add_argument("--p", type=int, default=None, help="single p value")
    p.add_argument("--max-weight", type=int, default=None, help="weight bound")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="sampling seed")
    p.add_argument("--tol", type=float, default=None, help="numeric tolerance")
    p.add_argument("--pairs", type=int, default=None, help="number of sampled pairs")
    add_format(p)

    p = sub.add_parser("dual", help="dual of an admissible index or word")
    p.add_argument("arg", help="index like \"(2,1)\" or word like xyy")
    add_format(p)

    p = sub.add_parser("index", help="describe an index or word")
    p.add_argument("arg", help="index like \"(2,1)\" or word like xyy")
    add_format(p)

    return parser


def _cmd_product(args) -> int:
    v = tshuffle_words(parse_word(args.w1), parse_word(args.w2))
    if args.format == "json":
        print(helement_to_json(v))
    else:
        print(v)
    return 0


def _cmd_expand(args) -> int:
    idx = parse_index(args.index)
    expanded = expand_interpolation(interpolated_symbol(idx.parts))
    if args.format == "json":
        print(zeta_combo_to_json(expanded))
    else:
        print(expanded)
    return 0


def _cmd_eval(args) -> int:
    combo = parse_zeta_combo(args.combo)
    t0 = Fraction(args.t)
    result = eval_combo(combo, t0, target_abs_err=args.tol)
    if args.format == "json":
        print(json.dumps({
            "value": result.value,
            "error_estimate": result.error_estimate,
            "cutoff_used": result.cutoff_used,
            "tol_ok": result.tol_ok,
        }))
    else:
        print("%.8f ± %.3e" % (result.value, result.error_estimate))
        if not result.tol_ok:
            print(
                "error: estimate %.3e exceeds tolerance %.3e"
                % (result.error_estimate, args.tol),
                file=sys.stderr,
            )
    return 0 if result.tol_ok else 1


_SUITE_FLAGS = {
    "lemma31": lambda a: {"max_run": a.max},
    "eq42": lambda a: {"max_exp": _first(a.max_exp, a.max)},
    "theorem22": lambda a: {"max_run": _first(a.r, a.max), "max_exp": a.max_exp},
    "prop32": lambda a: {"max_exp": _first(a.max_exp, a.max), "max_run": _first(a.r, a.s)},
    "eq48": lambda a: {"max_param": a.max},
    "height2": lambda a: {"max_exp": a.max_exp, "max_run": _first(a.r, a.max)},
    "prop41": lambda a: {
        "k_values": None if a.k is None else [a.k],
        "p_values": None if a.p is None else [a.p],
    },
    "cor42": lambda a: {"max_k": _first(a.k, a.max)},
    "prop43": lambda a: {"max_k": _first(a.k, a.max)},
    "euler": lambda a: {"max_arg": a.max},
    "homomorphism-numeric": lambda a: {
        "n_pairs": a.pairs,
        "max_weight": a.max_weight,
        "seed": a.seed,
        "tol": a.tol,
    },
    "duality-numeric": lambda a: {"max_weight": a.max_weight},
}


def _first(*values):
    for v in values:
        if v is not None:
            return v
    return None


def _cmd_verify(args) -> int:
    kwargs = {
        key: val
        for key, val in _SUITE_FLAGS[args.suite](args).items()
        if val is not None
    }
    report = SUITES[args.suite](**kwargs)
    if args.format == "json":
        print(json.dumps(report.to_json_obj()))
    else:
        print(
            "suite %s: %d/%d cases passed in %.2fs"
            % (report.suite, report.cases_passed, report.cases_total, report.wall_time_s)
        )
        for f in report.failures:
            print("  FAIL %s" % json.dumps(f.parameters))
            print("    lhs:  %s" % f.lhs)
            print("    rhs:  %s" % f.rhs)
            print("    diff: %s" % f.diff)
    return 0 if report.passed else 1


def _parse_index_or_word(text: str):
    s = text.strip()
    if s.startswith("(") or "," in s or s.isdigit():
        idx = parse_index(s)
        return idx, word_from_index(idx)
    w = parse_word(s)
    return (index_from_word(w) if s and s != "1" and s[-1] == "y" else None), w


def _cmd_dual(args) -> int:
    arg = args.arg.strip()
    as_index = arg.startswith("(") or "," in arg or arg.isdigit()
    _, w = _parse_index_or_word(arg)
    dw = dual(w)
    didx = index_from_word(dw)
    if args.format == "json":
        print(json.dumps({"index": str(didx), "word": str(dw)}))
    elif as_index:
        print(didx)
    else:
        print(dw)
    return 0


def _cmd_index(args) -> int:
    idx, w = _parse_index_or_word(args.arg)
    info = {
        "word": str(w),
        "index": None if idx is None else str(idx),
        "weight": len(w),
        "depth": w.count("y"),
        "height": None if idx is None else idx.height,
        "admissible": idx is not None and idx.admissible,
    }
    if info["admissible"]:
        info["dual"] = str(index_from_word(dual(w)))
    if args.format == "json":
        print(json.dumps(info))
    else:
        for key, val in info.items():
            print("%s: %s" % (key, val))
    return 0


_COMMANDS = {
    "product": _cmd_product,
    "expand": _cmd_expand,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "dual": _cmd_dual,
    "index": _cmd_index,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
