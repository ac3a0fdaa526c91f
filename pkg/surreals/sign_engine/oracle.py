"""
Naive reference implementations used as ground truth by the tests.

Finite surreals here are plain strings over "+-" and every question is
answered position by position from the literal definitions: no run
encoding, no ordinal arithmetic, no shared comparison or maximum code
with the engine. Only the error types and the Order result enum are
shared. Keep it that way; the point of this module is to disagree with
the engine when the engine is wrong.
"""

import itertools
import logging
import math
import os
from typing import List, Optional, Sequence, Union

from surreals.sign_engine.errors import NoneFoundError, NotSeparatedError, OracleBoundError
from surreals.sign_engine.ordinal import Order

logger = logging.getLogger(__name__)

# FlatSeq length bound
ORACLE_MAX_LEN = int(os.getenv("SURREALS_ORACLE_MAX_LEN", "6"))

# chain members examined before a position is declared undefined
CHAIN_HORIZON = 64

FlatSeq = str

# a position: a natural number, or math.inf for any transfinite one
Position = Union[int, float]

_RANK = {"-": -1, None: 0, "+": 1}


def enumerate_surreals(max_len: int) -> List[FlatSeq]:
    """
    Every sign string of length <= max_len, by length then with '-' before '+'.

    Raises:
        OracleBoundError: if max_len is negative or above ORACLE_MAX_LEN.
    """
    if max_len < 0:
        raise OracleBoundError(f"length bound {max_len} is negative")
    if max_len > ORACLE_MAX_LEN:
        raise OracleBoundError(
            f"length bound {max_len} exceeds the oracle bound {ORACLE_MAX_LEN} (SURREALS_ORACLE_MAX_LEN)"
        )
    return [
        "".join(signs)
        for n in range(max_len + 1)
        for signs in itertools.product("-+", repeat=n)
    ]


def naive_compare(s: FlatSeq, t: FlatSeq) -> Order:
    for gamma in range(max(len(s), len(t))):
        a = s[gamma] if gamma < len(s) else None
        b = t[gamma] if gamma < len(t) else None
        if a != b:
            return Order.LESS if _RANK[a] < _RANK[b] else Order.GREATER
    return Order.EQUAL


def _naive_less(s: FlatSeq, t: FlatSeq) -> bool:
    return naive_compare(s, t) is Order.LESS


def _naive_max(S: Sequence[FlatSeq]) -> FlatSeq:
    best = S[0]
    for s in S[1:]:
        if _naive_less(best, s):
            best = s
    return best


def _naive_min(S: Sequence[FlatSeq]) -> FlatSeq:
    best = S[0]
    for s in S[1:]:
        if _naive_less(s, best):
            best = s
    return best


def naive_sup_star(S: Sequence[FlatSeq]) -> FlatSeq:
    """A finite set always has a maximum: max + '+', or the empty sequence."""
    return _naive_max(S) + "+" if S else ""


def naive_inf_star(T: Sequence[FlatSeq]) -> FlatSeq:
    return _naive_min(T) + "-" if T else ""


def brute_separators(S: Sequence[FlatSeq], T: Sequence[FlatSeq], bound: int) -> List[FlatSeq]:
    """Every w of length <= bound with S < w < T, in enumeration order."""
    return [
        w for w in enumerate_surreals(bound)
        if all(_naive_less(u, w) for u in S) and all(_naive_less(w, v) for v in T)
    ]


def brute_min_separator(S: Sequence[FlatSeq], T: Sequence[FlatSeq], bound: int) -> FlatSeq:
    """
    The shortest separator of S and T found by exhaustive search.

    Also checks that it is the only one of its length and that every longer
    separator within the bound extends it.

    Raises:
        NotSeparatedError: if S < T fails.
        NoneFoundError: if bound is below max(len(sup* S), len(inf* T)).
    """
    for u in S:
        for v in T:
            if not _naive_less(u, v):
                raise NotSeparatedError(f"S < T fails: {u or '0'} is not below {v or '0'}", (u, v))
    needed = max(len(naive_sup_star(S)), len(naive_inf_star(T)))
    if bound < needed:
        raise NoneFoundError(f"bound {bound} is below {needed}, the length a separator may need")
    found = brute_separators(S, T, bound)
    if not found:
        raise NoneFoundError(f"no separator of length <= {bound}")
    shortest = min(len(w) for w in found)
    minimal = [w for w in found if len(w) == shortest]
    if len(minimal) > 1:
        raise RuntimeError(f"several shortest separators: {minimal}")
    w = minimal[0]
    strays = [x for x in found if not x.startswith(w)]
    if strays:
        raise RuntimeError(f"separators {strays} do not extend the shortest one {w or '0'}")
    logger.debug("brute force: %d separators up to length %d, shortest %r", len(found), bound, w)
    return w


def stabilization_probe(base: FlatSeq, gamma: Position, tail: str = "+") -> Optional[str]:
    """
    The value at gamma of the limit of the chain {base + tail*i}, read off
    literally: find a member i defined at gamma whose successor member
    agrees with it on every position up to and including gamma, and
    return its sign there. None means undefined, which is the answer for
    transfinite positions since no member reaches them.
    """
    if tail not in ("+", "-"):
        raise ValueError(f"chain tail must be '+' or '-', got {tail!r}")
    for i in range(CHAIN_HORIZON):
        member, successor = base + tail * i, base + tail * (i + 1)
        if len(member) <= gamma:
            continue
        cut = int(gamma) + 1
        if member[:cut] == successor[:cut]:
            return member[cut - 1]
        logger.debug("members %d and %d disagree up to %s", i, i + 1, gamma)
    if gamma != math.inf:
        logger.warning("no agreement at position %s within %d chain members", gamma, CHAIN_HORIZON)
    return None
