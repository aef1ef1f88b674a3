"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import conemat, tropical
from .cartan import CartanError, CartanSpec, parse_cartan_matrix, parse_type_label
from .report import CHECK_NAMES, box_radius_bounds, verify_words
from .weyl import (
    NotReducedError,
    ReducedWord,
    enumerate_reduced_words,
    format_word,
    parse_word,
    sample_reduced_words,
)


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"cannot parse {what} {text!r}") from None


def _names(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _cartan(args: argparse.Namespace) -> CartanSpec:
    if (args.cartan is None) == (args.cartan_matrix is None):
        raise UsageError("give exactly one of --cartan and --cartan-matrix")
    if args.cartan is not None:
        return parse_type_label(args.cartan)
    return parse_cartan_matrix(args.cartan_matrix)


def _word(cartan: CartanSpec, text: str | None) -> ReducedWord:
    if text is None:
        raise UsageError("--word is required")
    return ReducedWord.of(cartan, parse_word(text))


def render_matrices(word: ReducedWord, names: Sequence[str], fmt: str) -> str:
    mats = {name: conemat.build_matrix(word, name) for name in names}
    if fmt == "json":
        payload = {
            "cartan": word.cartan.describe(),
            "word": list(word.letters),
            "matrices": {k: m.to_lists() for k, m in mats.items()},
        }
        return json.dumps(payload)
    if len(mats) == 1:
        return next(iter(mats.values())).to_text()
    return "\n\n".join(f"{k}\n{m.to_text()}" for k, m in mats.items())


# -- commands -------------------------------------------------------------------

def cmd_matrices(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    word = _word(cartan, args.word)
    names = _names(args.which) if args.which else list(conemat.MATRIX_NAMES)
    print(render_matrices(word, names, args.format))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    modes = sum(x for x in (args.word is not None, args.all, args.sample is not None))
    if modes != 1:
        raise UsageError("give exactly one of --word, --all and --sample")
    if args.word is not None:
        words = [_word(cartan, args.word)]
    elif args.all:
        words = list(enumerate_reduced_words(cartan, args.limit))
    else:
        words = sample_reduced_words(cartan, args.sample, args.seed)
    skip: list[str] = []
    if args.checks:
        wanted = _names(args.checks)
        unknown = sorted(set(wanted) - set(CHECK_NAMES))
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
        skip = [c for c in CHECK_NAMES if c not in wanted]
    box = box_radius_bounds(args.box) if args.box is not None else None
    reports = verify_words(words, box, seed=args.seed, skip=skip, jobs=args.jobs)
    for rep in reports:
        if args.format == "json":
            print(json.dumps(rep.to_json(include_matrices=not args.no_matrices)))
        else:
            status = "PASS" if rep.passed else "FAIL " + ",".join(rep.failures())
            print(f"{rep.word} {status}")
    if args.format == "text":
        ok = sum(r.passed for r in reports)
        print(f"{ok}/{len(reports)} words passed")
    return 0 if all(r.passed for r in reports) else 1


def cmd_member(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    word = _word(cartan, args.word)
    if args.point is None:
        raise UsageError("--point is required")
    c = _ints(args.point, "point")
    if len(c) != len(word):
        raise UsageError(f"point has length {len(c)}, word has length {len(word)}")
    by_def = conemat.in_lusztig_cone_def(word, c)
    coeffs = conemat.lusztig_coefficients(word, c)
    by_L = all(x >= 0 for x in coeffs)
    if args.format == "json":
        print(json.dumps({"word": list(word.letters), "point": list(c), "definition": by_def,
                          "L": by_L, "coefficients": list(coeffs) if by_L else None}))
    else:
        print(f"definition: {'inside' if by_def else 'outside'}")
        print(f"L: {'inside' if by_L else 'outside'}")
        if by_L:
            print(f"coefficients: {format_word(coeffs)}")
    return 0


def cmd_words(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    words = enumerate_reduced_words(cartan, args.limit)
    if args.count:
        print(sum(1 for _ in words))
    else:
        for w in words:
            print(w)
    return 0


def cmd_trop(args: argparse.Namespace) -> int:
    variables = _names(args.vars)
    expr = tropical.parse_expr(args.expr, variables)
    form = tropical.tropicalize(expr)
    if args.trop_command == "eval":
        if args.point is None:
            raise UsageError("--point is required")
        print(tropical.trop_eval(form, _ints(args.point, "point")))
    else:
        print(json.dumps(form.to_json()))
    return 0


def cmd_string_lowest(args: argparse.Namespace) -> int:
    cartan = _cartan(args)
    word = _word(cartan, args.word)
    if args.weight is None:
        raise UsageError("--weight is required")
    print(format_word(conemat.lowest_string(word, _ints(args.weight, "weight"))))
    return 0


# -- parser -----------------------------------------------------------------------

def _add_cartan(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cartan", help="finite type label, e.g. A3")
    p.add_argument("--cartan-matrix", help='explicit matrix, rows separated by ";", e.g. "2,-1;-1,2"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lusztigcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrices", help="print V, W, S, T, C, P, X, Ltilde, L for a word")
    _add_cartan(p)
    p.add_argument("--word", help="comma-separated 1-based letters")
    p.add_argument("--which", help="comma-separated subset of " + ",".join(conemat.MATRIX_NAMES))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_matrices)

    p = sub.add_parser("verify", help="run the identity checks on one or many words")
    _add_cartan(p)
    p.add_argument("--word")
    p.add_argument("--all", action="store_true", help="every reduced word for w0")
    p.add_argument("--sample", type=int, help="this many uniformly random reduced words")
    p.add_argument("--limit", type=int, help="truncate --all enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, help="cone agreement on the box [-R, R+2]^N")
    p.add_argument("--checks", help="comma-separated subset of checks to run")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--no-matrices", action="store_true", help="omit matrices from JSON reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("member", help="decide Lusztig cone membership both ways")
    _add_cartan(p)
    p.add_argument("--word")
    p.add_argument("--point")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("words", help="enumerate reduced words for w0")
    _add_cartan(p)
    p.add_argument("--list", action="store_true", help="print the words (default)")
    p.add_argument("--count", action="store_true", help="print only the number of words")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("trop", help="tropicalise a subtraction-free expression")
    tsub = p.add_subparsers(dest="trop_command", required=True)
    for name, helptext in (("eval", "evaluate at an integer point"),
                           ("form", "print numerator/denominator supports as JSON")):
        tp = tsub.add_parser(name, help=helptext)
        tp.add_argument("--vars", required=True)
        tp.add_argument("--expr", required=True)
        if name == "eval":
            tp.add_argument("--point")
        tp.set_defaults(func=cmd_trop)

    p = sub.add_parser("string-lowest", help="string of the lowest weight vector")
    _add_cartan(p)
    p.add_argument("--word")
    p.add_argument("--weight", help="dominant weight in fundamental-weight coordinates")
    p.set_defaults(func=cmd_string_lowest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CartanError, NotReducedError, conemat.ConeError,
            tropical.ExprError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
