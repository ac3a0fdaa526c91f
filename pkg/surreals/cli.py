"""
Command-line front end.

    python -m surreals cmp "+^w -" "+^w"          ->  <
    python -m surreals sep "+" "+-+"              ->  +-
    python -m surreals separate --left "chain(0;+)" --right "chain(+^w;-)"

Exit codes: 0 success, 1 domain error (not separated, minus tail, ...),
2 malformed notation or bad usage. SET arguments accept inline set
notation or @file (one item per line, '#' comments).
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

from surreals.sign_engine import oracle
from surreals.sign_engine.errors import NotationError, OracleBoundError, SurrealError
from surreals.sign_engine.ordinal import ord_add, ord_compare, ord_left_sub, ord_max, ord_parse
from surreals.sign_engine.separation import (
    endpoint_separator,
    characterizing_set,
    prolonged_separator,
    sep,
    separates,
    shortest_separator,
    shortest_separator_via_sep,
)
from surreals.sign_engine.sets import (
    ExtremumKind,
    SurrealSet,
    inf_star,
    sample_elements,
    set_format,
    set_max,
    set_min,
    set_parse,
    sup_star,
    witness_set,
)
from surreals.sign_engine.sign_seq import (
    SignSeq,
    compare,
    negate,
    restrict,
    seq_parse,
    value_at,
)
from surreals.utils.set_files import read_set_argument

logger = logging.getLogger(__name__)

LOG_LEVEL = os.getenv("SURREALS_LOG_LEVEL", "WARNING").upper()
SAMPLE_SIZE = int(os.getenv("SURREALS_SAMPLE_SIZE", "5"))

SEPARATE_METHODS = ("sep", "hat", "endpoint", "prolong", "brute")


def _load_set(argument: str) -> SurrealSet:
    return set_parse(read_set_argument(argument))


def _to_flat(s: SignSeq) -> str:
    """A finite surreal as a plain '+-' string for the oracle."""
    if not s.length.is_finite:
        raise SurrealError(f"{s} is transfinite; brute force needs finite surreals", "finite-only")
    if s.length.to_int() > oracle.ORACLE_MAX_LEN:
        raise OracleBoundError(f"{s} is longer than the oracle bound {oracle.ORACLE_MAX_LEN}")
    return "".join(sign.value * count.to_int() for sign, count in s.runs)


def _flat_set(S: SurrealSet) -> List[str]:
    if S.chains:
        raise SurrealError("brute force needs sets without chains", "finite-only")
    return [_to_flat(e) for e in S.elements]


def _print_extremum(extremum) -> None:
    if extremum.kind is ExtremumKind.ATTAINED:
        print(extremum.value)
    else:
        print(extremum.kind.value)


# ============= Subcommands =============

def _cmd_cmp(args) -> None:
    print(compare(seq_parse(args.a), seq_parse(args.b)).value)


def _cmd_len(args) -> None:
    print(seq_parse(args.a).length)


def _cmd_restrict(args) -> None:
    print(restrict(seq_parse(args.a), ord_parse(args.gamma)))


def _cmd_at(args) -> None:
    print(value_at(seq_parse(args.a), ord_parse(args.gamma)).value)


def _cmd_neg(args) -> None:
    print(negate(seq_parse(args.a)))


def _cmd_sup(args) -> None:
    print(sup_star(_load_set(args.set)))


def _cmd_inf(args) -> None:
    print(inf_star(_load_set(args.set)))


def _cmd_max(args) -> None:
    _print_extremum(set_max(_load_set(args.set)))


def _cmd_min(args) -> None:
    _print_extremum(set_min(_load_set(args.set)))


def _cmd_sample(args) -> None:
    for member in sample_elements(_load_set(args.set), args.n):
        print(member)


def _cmd_sep(args) -> None:
    print(sep(seq_parse(args.a), seq_parse(args.b)))


def _cmd_separate(args) -> None:
    S, T = _load_set(args.left), _load_set(args.right)
    if args.method == "sep":
        print(shortest_separator_via_sep(S, T))
    elif args.method == "hat":
        print(shortest_separator(S, T))
    elif args.method == "prolong":
        print(prolonged_separator(S, T))
    elif args.method == "endpoint":
        result = endpoint_separator(S, T)
        print(result.choice.value, file=sys.stderr)
        print(result.value)
    else:
        lower, upper = _flat_set(S), _flat_set(T)
        bound = args.bound
        if bound is None:
            bound = ord_max(sup_star(S).length, inf_star(T).length).to_int()
        print(SignSeq.of(oracle.brute_min_separator(lower, upper, bound)))


def _cmd_check(args) -> None:
    ok = separates(seq_parse(args.w), _load_set(args.left), _load_set(args.right))
    print("yes" if ok else "no")


def _cmd_witness(args) -> None:
    print(set_format(witness_set(seq_parse(args.w))))


def _cmd_char(args) -> None:
    print(set_format(characterizing_set(seq_parse(args.w))))


def _cmd_oracle(args) -> None:
    S, T = _load_set(args.left), _load_set(args.right)
    print(SignSeq.of(oracle.brute_min_separator(_flat_set(S), _flat_set(T), args.bound)))


def _cmd_ord(args) -> None:
    a, b = ord_parse(args.a), ord_parse(args.b)
    if args.op == "add":
        print(ord_add(a, b))
    elif args.op == "sub":
        print(ord_left_sub(a, b))
    else:
        print(ord_compare(a, b).value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surreals",
        description="Surreal numbers as sign sequences: bounds and separators of sets.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *positionals):
        cmd = sub.add_parser(name, help=help_text)
        for positional in positionals:
            cmd.add_argument(positional)
        cmd.set_defaults(handler=handler)
        return cmd

    add("cmp", _cmd_cmp, "compare two surreals", "a", "b")
    add("len", _cmd_len, "length of a surreal", "a")
    add("restrict", _cmd_restrict, "initial segment of length G", "a", "gamma")
    add("at", _cmd_at, "sign at position G", "a", "gamma")
    add("neg", _cmd_neg, "flip every sign", "a")
    add("sup", _cmd_sup, "sup* of a set", "set")
    add("inf", _cmd_inf, "inf* of a set", "set")
    add("max", _cmd_max, "maximum of a set", "set")
    add("min", _cmd_min, "minimum of a set", "set")
    sample = add("sample", _cmd_sample, "list elements and first chain members", "set")
    sample.add_argument("-n", type=int, default=SAMPLE_SIZE)
    add("sep", _cmd_sep, "ordered separator sep(A, B)", "a", "b")

    separate = add("separate", _cmd_separate, "a separator of two sets")
    separate.add_argument("--left", required=True)
    separate.add_argument("--right", required=True)
    separate.add_argument("--method", choices=SEPARATE_METHODS, default="sep")
    separate.add_argument("--bound", type=int, default=None, help="brute only; defaults to the longer of sup* and inf*")

    check = add("check", _cmd_check, "does W separate the sets?", "w")
    check.add_argument("--left", required=True)
    check.add_argument("--right", required=True)

    add("witness", _cmd_witness, "a set whose sup* is W", "w")
    add("char", _cmd_char, "a set whose upper bounds W characterizes", "w")

    oracle_cmd = sub.add_parser("oracle", help="naive reference computations")
    oracle_sub = oracle_cmd.add_subparsers(dest="oracle_command", required=True)
    brute = oracle_sub.add_parser("bruteforce", help="exhaustive shortest separator")
    brute.add_argument("--left", required=True)
    brute.add_argument("--right", required=True)
    brute.add_argument("--bound", type=int, required=True)
    brute.set_defaults(handler=_cmd_oracle)

    ord_cmd = sub.add_parser("ord", help="ordinal arithmetic")
    ord_cmd.add_argument("op", choices=("add", "sub", "cmp"))
    ord_cmd.add_argument("a")
    ord_cmd.add_argument("b")
    ord_cmd.set_defaults(handler=_cmd_ord)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("command %s", args.command)
    try:
        args.handler(args)
    except NotationError as exc:
        print(f"error [{exc.rule}]: {exc}", file=sys.stderr)
        return 2
    except SurrealError as exc:
        print(f"error [{exc.rule}]: {exc}", file=sys.stderr)
        return 1
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error [io]: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
