"""Command line interface over the factorization library.

Every subcommand prints exactly one canonical JSON object (sorted
keys, compact separators, trailing newline) to stdout.  Coordinate
and matrix data arrives as a JSON object through --input PATH, with
"-" meaning stdin; small parameters travel as flags.  Scalars are
canonical strings like "1/2-3/4*i"; plain integers are also accepted.

Exit codes: 0 on success; 2 for malformed requests (invalid-input,
invalid-word, budget-exceeded, branch-violation); 3 when a well-formed
point lies where the requested map is undefined (exceptional-set,
stratum-failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InvalidInputError, LibError
from .factorization import (
    forward_map,
    forward_map_stratum,
    inverse_map,
    jacobian_det_ad,
    jacobian_det_double_product,
    jacobian_det_formula,
    transpose_dual,
)
from .linalg import ldu, principal_minor
from .serialization import (
    diag_from_json,
    diag_to_json,
    dumps_canonical,
    matrix_from_json,
    matrix_to_json,
    pairs_from_json,
    pairs_to_json,
    roots_from_json,
    roots_to_json,
    word_to_json,
)
from .weyl import (
    canonical_ordering,
    canonical_word,
    enumerate_reduced_words,
    ordering_from_word,
    printed_count_bc,
    standard_count_a,
    validate_ordering,
    word_evaluate,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEGENERATE = 3

_EXIT_BY_KIND = {
    "invalid-input": EXIT_INVALID,
    "invalid-word": EXIT_INVALID,
    "budget-exceeded": EXIT_INVALID,
    "branch-violation": EXIT_INVALID,
    "exceptional-set": EXIT_DEGENERATE,
    "stratum-failure": EXIT_DEGENERATE,
}


def _parse_word_flag(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInputError(
            f"a word flag must be comma-separated integers, got {text!r}"
        ) from None


def _read_input(args) -> dict:
    path = getattr(args, "input", None)
    if path is None:
        raise InvalidInputError("this subcommand needs --input PATH (or - for stdin)")
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as err:
        raise InvalidInputError(f"cannot read input: {err}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidInputError(f"input is not valid JSON: {err}") from None
    if not isinstance(obj, dict):
        raise InvalidInputError("input must be a JSON object")
    return obj


def _optional_diag(obj: dict):
    return diag_from_json(obj["h"]) if "h" in obj else None


# -- subcommands -------------------------------------------------------


def cmd_forward(args) -> dict:
    obj = _read_input(args)
    pairs = pairs_from_json(obj.get("pairs", []))
    h = _optional_diag(obj)
    if args.stratum_word is not None:
        if args.word is not None:
            raise InvalidInputError("give either --word or --stratum-word, not both")
        w = word_evaluate(args.family, args.rank, _parse_word_flag(args.stratum_word))
        res = forward_map_stratum(args.family, args.rank, w, pairs, h=h)
        return {
            "gammas": word_to_json(res.gammas),
            "matrix": matrix_to_json(res.matrix),
            "taus": roots_to_json(res.taus),
        }
    if args.word is None:
        raise InvalidInputError("forward needs --word or --stratum-word")
    res = forward_map(args.family, args.rank, _parse_word_flag(args.word), pairs, h=h)
    return {
        "h": diag_to_json(res.h),
        "l": diag_to_json(res.l),
        "matrix": matrix_to_json(res.matrix),
        "s": diag_to_json(res.s),
        "taus": roots_to_json(res.taus),
        "u": diag_to_json(res.u),
    }


def cmd_invert(args) -> dict:
    obj = _read_input(args)
    if "l" not in obj or "u" not in obj:
        raise InvalidInputError('invert needs "l" and "u" coordinate lists')
    pairs = inverse_map(
        args.family,
        args.rank,
        _parse_word_flag(args.word),
        diag_from_json(obj["l"]),
        diag_from_json(obj["u"]),
        h=_optional_diag(obj),
    )
    return {"pairs": pairs_to_json(pairs)}


def cmd_dual(args) -> dict:
    obj = _read_input(args)
    pairs, hdual = transpose_dual(
        args.family,
        args.rank,
        _parse_word_flag(args.word),
        pairs_from_json(obj.get("pairs", [])),
        h=_optional_diag(obj),
    )
    return {"h_dual": diag_to_json(hdual), "pairs": pairs_to_json(pairs)}


def cmd_ldu(args) -> dict:
    obj = _read_input(args)
    if "matrix" not in obj:
        raise InvalidInputError('ldu needs a "matrix"')
    g = matrix_from_json(obj["matrix"])
    lower, d, upper = ldu(g)
    out = {
        "d": diag_to_json(d),
        "lower": matrix_to_json(lower),
        "upper": matrix_to_json(upper),
    }
    if args.minors:
        out["minors"] = diag_to_json(
            principal_minor(g, k) for k in range(1, len(g) + 1)
        )
    return out


def cmd_ordering(args) -> dict:
    taus = ordering_from_word(args.family, args.rank, _parse_word_flag(args.word))
    return {"ordering": roots_to_json(taus)}


def cmd_validate_ordering(args) -> dict:
    obj = _read_input(args)
    if "ordering" not in obj:
        raise InvalidInputError('validate-ordering needs an "ordering" root list')
    word = validate_ordering(
        args.family, args.rank, roots_from_json(obj["ordering"])
    )
    return {"word": word_to_json(word)}


def cmd_canonical_word(args) -> dict:
    return {
        "ordering": roots_to_json(canonical_ordering(args.family, args.rank)),
        "word": word_to_json(canonical_word(args.family, args.rank)),
    }


def cmd_count_words(args) -> dict:
    count = len(enumerate_reduced_words(args.family, args.rank, budget=args.budget))
    if args.family == "A":
        formula = str(standard_count_a(args.rank + 1))
    elif args.family in ("B", "C"):
        formula = str(printed_count_bc(args.rank))
    else:
        formula = None
    return {"count": count, "formula": formula}


def cmd_jacobian(args) -> dict:
    obj = _read_input(args)
    word = _parse_word_flag(args.word)
    pairs = pairs_from_json(obj.get("pairs", []))
    return {
        "ad": str(jacobian_det_ad(args.family, args.rank, word, pairs)),
        "double_product": str(
            jacobian_det_double_product(args.family, args.rank, word, pairs)
        ),
        "formula": str(jacobian_det_formula(args.family, args.rank, word, pairs)),
    }


def cmd_haar_density(args) -> dict:
    from .haar import haar_density

    obj = _read_input(args)
    density = haar_density(
        args.family, args.rank, _parse_word_flag(args.word), pairs_from_json(obj.get("pairs", []))
    )
    return {"density": str(density)}


def cmd_self_check(args) -> dict:
    from .selfcheck import run_self_check

    return run_self_check()


# -- parser ------------------------------------------------------------


def _add_family_rank(p) -> None:
    p.add_argument("--family", required=True, choices=("A", "B", "C", "D"))
    p.add_argument("--rank", required=True, type=int)


def _add_word(p, required: bool = True) -> None:
    p.add_argument(
        "--word",
        required=required,
        default=None,
        help="comma-separated 1-based simple reflection indices, e.g. 1,2,1",
    )


def _add_input(p) -> None:
    p.add_argument("--input", default=None, help="JSON input path, - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootfact",
        description="exact root subgroup factorization on the classical groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("forward", help="evaluate the factorization product")
    _add_family_rank(p)
    _add_word(p, required=False)
    p.add_argument(
        "--stratum-word",
        default=None,
        help="word for the stratum element w; replaces --word",
    )
    _add_input(p)
    p.set_defaults(func=cmd_forward)

    p = sub.add_parser("invert", help="recover pairs from (l, u, h)")
    _add_family_rank(p)
    _add_word(p)
    _add_input(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("dual", help="transpose-dual coordinates and torus")
    _add_family_rank(p)
    _add_word(p)
    _add_input(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("ldu", help="exact triangular factorization of a matrix")
    p.add_argument("--minors", action="store_true", help="also print principal minors")
    _add_input(p)
    p.set_defaults(func=cmd_ldu)

    p = sub.add_parser("ordering", help="root ordering of a reduced word")
    _add_family_rank(p)
    _add_word(p)
    p.set_defaults(func=cmd_ordering)

    p = sub.add_parser("validate-ordering", help="recover the word of an ordering")
    _add_family_rank(p)
    _add_input(p)
    p.set_defaults(func=cmd_validate_ordering)

    p = sub.add_parser("canonical-word", help="the fixed per-family word and ordering")
    _add_family_rank(p)
    p.set_defaults(func=cmd_canonical_word)

    p = sub.add_parser("count-words", help="count reduced words of the longest element")
    _add_family_rank(p)
    p.add_argument("--budget", type=int, default=500000)
    p.set_defaults(func=cmd_count_words)

    p = sub.add_parser("jacobian", help="Jacobian determinant, three exact ways")
    _add_family_rank(p)
    _add_word(p)
    _add_input(p)
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("haar-density", help="invariant density at a coordinate point")
    _add_family_rank(p)
    _add_word(p)
    _add_input(p)
    p.set_defaults(func=cmd_haar_density)

    p = sub.add_parser("self-check", help="run the built-in identity battery")
    p.set_defaults(func=cmd_self_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except LibError as err:
        sys.stdout.write(dumps_canonical({"error": err.payload()}))
        return _EXIT_BY_KIND.get(err.kind, EXIT_INVALID)
    sys.stdout.write(dumps_canonical(payload))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
