"""
Bounding and separating sets of surreals.

With s = sup* S and alpha = len(s), a surreal z lies above all of S iff
s <= z|alpha; symmetrically for inf*. Everything else follows from that:

- prolonged_separator: s extended with minuses past every member of T
- endpoint_separator:  the longer of sup* S and inf* T
- shortest_separator:  pad sup* S with minuses and inf* T with pluses to
                       one more than the longer length; cut both at their
                       first difference
- sep:                 the same value, computed by the four-case rule on
                       the pair (sup* S, inf* T)

Every construction over two sets checks S < T first and raises
NotSeparatedError otherwise.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from surreals.sign_engine.errors import NotSeparatedError
from surreals.sign_engine.ordinal import ONE, Order, ord_add, ord_compare, ord_max
from surreals.sign_engine.sets import (
    ChainSpec,
    ExtremumKind,
    SurrealSet,
    all_greater_than,
    all_less_than,
    chain_limit,
    cofinal_chains,
    find_violation,
    inf_star,
    length_bound,
    set_max,
    set_min,
    sup_star,
    witness_set,
)
from surreals.sign_engine.sign_seq import (
    EMPTY,
    Sign,
    SignQuery,
    SignSeq,
    append,
    compare,
    first_difference,
    first_position_of,
    prolong,
    restrict,
    strip_minus_tail,
    value_at,
)

logger = logging.getLogger(__name__)


class EndpointChoice(str, Enum):
    SUP_SIDE = "sup"
    INF_SIDE = "inf"
    BOTH = "both"


@dataclass(frozen=True)
class EndpointSeparator:
    choice: EndpointChoice
    value: SignSeq


# ============= Bounds =============

def is_strict_upper_bound(S: SurrealSet, z: SignSeq) -> bool:
    """S < z, decided through sup* S alone."""
    s = sup_star(S)
    return compare(s, restrict(z, s.length)) is not Order.GREATER


def is_strict_lower_bound(T: SurrealSet, z: SignSeq) -> bool:
    """z < T, decided through inf* T alone."""
    t = inf_star(T)
    return compare(restrict(z, t.length), t) is not Order.GREATER


def is_weak_upper_bound(S: SurrealSet, z: SignSeq) -> bool:
    """S <= z: a strict upper bound, or the maximum of S itself."""
    if is_strict_upper_bound(S, z):
        return True
    extremum = set_max(S)
    return extremum.kind is ExtremumKind.ATTAINED and extremum.value == z


def is_weak_lower_bound(T: SurrealSet, z: SignSeq) -> bool:
    if is_strict_lower_bound(T, z):
        return True
    extremum = set_min(T)
    return extremum.kind is ExtremumKind.ATTAINED and extremum.value == z


def characterizing_set(s: SignSeq) -> SurrealSet:
    """
    A set S such that, for every z, S < z iff s <= z|len(s).

    Minus tails do not disturb the characterization, so this is the witness
    set of s with its final minus run removed.
    """
    return witness_set(strip_minus_tail(s))


def uniform_sup_star(S: SurrealSet) -> SignSeq:
    """
    sup* S as the limit of the members of S each followed by one '+',
    taken in increasing order. A maximum makes that family end in max + '+';
    otherwise the cofinal chain {b + +^i} becomes {b + +^(i+1)}.
    """
    extremum = set_max(S)
    if extremum.kind is ExtremumKind.EMPTY:
        return EMPTY
    if extremum.kind is ExtremumKind.ATTAINED:
        return append(extremum.value, Sign.PLUS)
    shifted = [ChainSpec(append(c.base, Sign.PLUS), Sign.PLUS) for c in cofinal_chains(S)]
    return max(chain_limit(c) for c in shifted)


# ============= Separation =============

def separates(w: SignSeq, S: SurrealSet, T: SurrealSet) -> bool:
    """S < w < T."""
    return all_less_than(S, w) and all_greater_than(T, w)


def require_separated(S: SurrealSet, T: SurrealSet) -> None:
    """
    Raises:
        NotSeparatedError: unless S < T; the witness pair is set when both
            offending members could be named.
    """
    violation = find_violation(S, T)
    if violation is None:
        return
    witness = None
    if violation.lower is not None and violation.upper is not None:
        witness = (violation.lower, violation.upper)
    lower = violation.lower if violation.lower is not None else "a chain member"
    upper = violation.upper if violation.upper is not None else "a chain member"
    raise NotSeparatedError(f"S < T fails: {lower} is not below {upper}", witness)


def prolonged_separator(S: SurrealSet, T: SurrealSet) -> SignSeq:
    """sup* S followed by minuses up to eta = max(len(sup* S), length_bound(T))."""
    require_separated(S, T)
    s = sup_star(S)
    eta = ord_max(s.length, length_bound(T))
    logger.debug("prolonged separator: sup* %s, eta %s", s, eta)
    return prolong(s, Sign.MINUS, eta)


def endpoint_separator(S: SurrealSet, T: SurrealSet) -> EndpointSeparator:
    """The longer of sup* S and inf* T; sup* S when they are equally long."""
    require_separated(S, T)
    s, t = sup_star(S), inf_star(T)
    order = ord_compare(s.length, t.length)
    if order is Order.EQUAL:
        if not (separates(s, S, T) and separates(t, S, T)):
            raise RuntimeError(f"equal-length endpoints {s}, {t} do not both separate")
        return EndpointSeparator(EndpointChoice.BOTH, s)
    if order is Order.GREATER:
        return EndpointSeparator(EndpointChoice.SUP_SIDE, s)
    return EndpointSeparator(EndpointChoice.INF_SIDE, t)


def padded_endpoints(S: SurrealSet, T: SurrealSet):
    """
    (s_hat, t_hat): sup* S padded with minuses and inf* T padded with pluses,
    both to length max(len(sup* S), len(inf* T)) + 1. No separation check.
    """
    s, t = sup_star(S), inf_star(T)
    target = ord_add(ord_max(s.length, t.length), ONE)
    return prolong(s, Sign.MINUS, target), prolong(t, Sign.PLUS, target)


def shortest_separator(S: SurrealSet, T: SurrealSet) -> SignSeq:
    """The shortest w with S < w < T; every other separator prolongs it."""
    require_separated(S, T)
    s_hat, t_hat = padded_endpoints(S, T)
    gamma = first_difference(s_hat, t_hat)
    if gamma is None:
        raise RuntimeError(f"padded endpoints coincide: {s_hat}")
    logger.debug("shortest separator: s_hat %s, t_hat %s, cut at %s", s_hat, t_hat, gamma)
    return restrict(s_hat, gamma)


def sep(s: SignSeq, t: SignSeq) -> SignSeq:
    """
    The ordered separator of s and t:

    (a) s = t: s
    (b) first difference with both values defined at gamma: s|gamma
    (c) t properly prolongs s: t cut at its first + at or after len(s), or t
    (d) s properly prolongs t: s cut at its first - at or after len(t), or s
    """
    gamma = first_difference(s, t)
    if gamma is None:
        return s
    at_s, at_t = value_at(s, gamma), value_at(t, gamma)
    if SignQuery.UNDEFINED not in (at_s, at_t):
        return restrict(s, gamma)
    if at_s is SignQuery.UNDEFINED:
        cut = first_position_of(t, Sign.PLUS, s.length)
        return t if cut is None else restrict(t, cut)
    cut = first_position_of(s, Sign.MINUS, t.length)
    return s if cut is None else restrict(s, cut)


def shortest_separator_via_sep(S: SurrealSet, T: SurrealSet) -> SignSeq:
    require_separated(S, T)
    return sep(sup_star(S), inf_star(T))
