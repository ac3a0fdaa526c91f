"""
Finitely described sets of surreals and their canonical bounds.

A SurrealSet is a finite list of elements plus a finite list of chains.
A chain is the family {base + tail^i : i < w}: strictly increasing with
no maximum when the tail is +, strictly decreasing with no minimum when
it is -. Its limit base + tail^w is the barrier used to decide every
majorization question exactly:

- every member of an increasing chain lies below its limit;
- a surreal z lies above every member iff either z does not prolong the
  base and base < z, or the limit is an initial segment of z.

sup* S is max(S) + '+' when the maximum exists, the empty sequence for the
empty set, and otherwise the limit of a cofinal increasing chain. In the
last case the stabilization construction (take the value at gamma once
all large enough members agree up to gamma) only looks at a tail of S,
and every tail of S beyond the non-chain part lives in the cofinal
chains, whose members agree with the limit below any position once the
index is large enough. inf* is the mirror image through negate.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from surreals.sign_engine.errors import CofinalityGapError, MinusTailError
from surreals.sign_engine.ordinal import (
    ONE,
    OMEGA,
    Classification,
    Order,
    Ordinal,
    ord_add,
    ord_classify,
    ord_compare,
    ord_max,
    ord_predecessor,
)
from surreals.sign_engine.sign_seq import (
    EMPTY,
    Sign,
    SignSeq,
    append,
    compare,
    is_initial_segment,
    last_sign,
    negate,
    parse_surreal,
    prolong,
    seq_format,
)
from surreals.utils.notation import Cursor

logger = logging.getLogger(__name__)


# ============= Types =============

@dataclass(frozen=True)
class ChainSpec:
    """The family {base + tail^i : i < w}; i = 0 is the base itself."""
    base: SignSeq
    tail: Sign

    @property
    def increasing(self) -> bool:
        return self.tail is Sign.PLUS

    def member(self, i: int) -> SignSeq:
        return prolong(self.base, self.tail, ord_add(self.base.length, Ordinal.finite(i)))

    def __str__(self) -> str:
        return f"chain({seq_format(self.base)};{self.tail.value})"


@dataclass(frozen=True)
class SurrealSet:
    """Union of the finite elements and every chain family."""
    elements: Tuple[SignSeq, ...] = ()
    chains: Tuple[ChainSpec, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.elements and not self.chains

    @property
    def increasing_chains(self) -> List[ChainSpec]:
        return [c for c in self.chains if c.increasing]

    @property
    def decreasing_chains(self) -> List[ChainSpec]:
        return [c for c in self.chains if not c.increasing]

    def __str__(self) -> str:
        return set_format(self)


class ExtremumKind(str, Enum):
    ATTAINED = "attained"
    UNATTAINED = "unattained"
    EMPTY = "empty"


@dataclass(frozen=True)
class Extremum:
    """Outcome of set_max / set_min; `value` is set only when attained."""
    kind: ExtremumKind
    value: Optional[SignSeq] = None


@dataclass(frozen=True)
class Violation:
    """
    Why S < T fails. `lower`/`upper` are offending members when they can be
    named directly (elements or chain bases), None when they sit inside a chain.
    """
    lower: Optional[SignSeq] = None
    upper: Optional[SignSeq] = None


# ============= Chains =============

def chain_limit(c: ChainSpec) -> SignSeq:
    """base followed by w copies of the tail sign."""
    return SignSeq.from_runs(c.base.runs + ((c.tail, OMEGA),))


def negate_chain(c: ChainSpec) -> ChainSpec:
    return ChainSpec(negate(c.base), c.tail.opposite)


def negate_set(S: SurrealSet) -> SurrealSet:
    return SurrealSet(
        elements=tuple(negate(e) for e in S.elements),
        chains=tuple(negate_chain(c) for c in S.chains),
    )


def sample_elements(S: SurrealSet, n: int) -> List[SignSeq]:
    """The finite elements plus members 0..n-1 of every chain."""
    sampled = list(S.elements)
    for c in S.chains:
        sampled.extend(c.member(i) for i in range(n))
    return sampled


def _above_chain(z: SignSeq, c: ChainSpec) -> bool:
    """z > every member of the increasing chain c."""
    if is_initial_segment(chain_limit(c), z):
        return True
    return not is_initial_segment(c.base, z) and compare(c.base, z) is Order.LESS


def _below_chain(z: SignSeq, c: ChainSpec) -> bool:
    """z < every member of the decreasing chain c."""
    return _above_chain(negate(z), negate_chain(c))


def _chain_reaches_over(upper: ChainSpec, c: ChainSpec) -> bool:
    """Some member of the increasing chain `upper` lies above all of c."""
    limit = chain_limit(c)
    if ord_compare(upper.base.length, limit.length) is not Order.LESS:
        # every member of `upper` agrees with its base below len(limit)
        return _above_chain(upper.base, c)
    return not _above_chain(limit, upper)


def _chain_under_chain(c: ChainSpec, d: ChainSpec) -> bool:
    """Every member of decreasing d lies above every member of increasing c."""
    limit = chain_limit(c)
    if ord_compare(d.base.length, limit.length) is not Order.LESS:
        return _above_chain(d.base, c)
    return _below_chain(limit, d)


# ============= Order questions =============

def all_less_than(S: SurrealSet, z: SignSeq) -> bool:
    """Every member of S is < z."""
    if any(compare(e, z) is not Order.LESS for e in S.elements):
        return False
    for c in S.chains:
        if c.increasing:
            if not _above_chain(z, c):
                return False
        elif compare(c.base, z) is not Order.LESS:
            return False
    return True


def all_greater_than(T: SurrealSet, z: SignSeq) -> bool:
    """Every member of T is > z."""
    return all_less_than(negate_set(T), negate(z))


def _maximal_members(S: SurrealSet) -> List[SignSeq]:
    """Elements that bound their own descriptor: finite elements and bases of decreasing chains."""
    return list(S.elements) + [c.base for c in S.decreasing_chains]


def find_violation(S: SurrealSet, T: SurrealSet) -> Optional[Violation]:
    """None when S < T, otherwise the first offending descriptor pair found."""
    lows = _maximal_members(S)
    highs = list(T.elements) + [c.base for c in T.increasing_chains]
    for u in lows:
        for v in highs:
            if compare(u, v) is not Order.LESS:
                return Violation(u, v)
        for d in T.decreasing_chains:
            if not _below_chain(u, d):
                return Violation(u, None)
    for c in S.increasing_chains:
        for v in highs:
            if not _above_chain(v, c):
                return Violation(None, v)
        for d in T.decreasing_chains:
            if not _chain_under_chain(c, d):
                return Violation(None, None)
    return None


def set_less(S: SurrealSet, T: SurrealSet) -> bool:
    """S < T: every member of S is below every member of T."""
    return find_violation(S, T) is None


# ============= Extrema and canonical bounds =============

def set_max(S: SurrealSet) -> Extremum:
    """
    The maximum exists iff the largest element/decreasing-chain base lies
    above every increasing chain (not merely at or above its limit: "+^w --"
    is below "+^w" yet above every "+^i").
    """
    if S.is_empty:
        return Extremum(ExtremumKind.EMPTY)
    candidates = _maximal_members(S)
    if candidates:
        top = max(candidates)
        if all(_above_chain(top, c) for c in S.increasing_chains):
            return Extremum(ExtremumKind.ATTAINED, top)
    return Extremum(ExtremumKind.UNATTAINED)


def set_min(T: SurrealSet) -> Extremum:
    mirrored = set_max(negate_set(T))
    if mirrored.value is None:
        return mirrored
    return Extremum(mirrored.kind, negate(mirrored.value))


def cofinal_chains(S: SurrealSet) -> List[ChainSpec]:
    """Increasing chains that no member of S lies above."""
    members = _maximal_members(S)
    increasing = S.increasing_chains
    cofinal = []
    for c in increasing:
        if any(_above_chain(x, c) for x in members):
            continue
        if any(_chain_reaches_over(other, c) for other in increasing):
            continue
        cofinal.append(c)
    return cofinal


def sup_star(S: SurrealSet) -> SignSeq:
    """The canonical strict upper bound of S."""
    extremum = set_max(S)
    if extremum.kind is ExtremumKind.EMPTY:
        logger.debug("sup* of the empty set")
        return EMPTY
    if extremum.kind is ExtremumKind.ATTAINED:
        logger.debug("sup*: maximum %s attained", extremum.value)
        return append(extremum.value, Sign.PLUS)
    cofinal = cofinal_chains(S)
    if not cofinal:
        raise RuntimeError(f"set without maximum has no cofinal chain: {S}")
    limits = {chain_limit(c) for c in cofinal}
    if len(limits) > 1:
        logger.warning("cofinal chains of %s disagree on their limit: %s", S, sorted(limits))
    value = max(limits)
    logger.debug("sup*: no maximum, cofinal chain %s, limit %s", cofinal[0], value)
    return value


def inf_star(T: SurrealSet) -> SignSeq:
    """The canonical strict lower bound of T (mirror of sup*)."""
    return negate(sup_star(negate_set(T)))


def length_bound(S: SurrealSet) -> Ordinal:
    """A strict upper bound on the lengths of all members of S (0 for the empty set)."""
    bounds = [ord_add(e.length, ONE) for e in S.elements]
    bounds.extend(ord_add(c.base.length, OMEGA) for c in S.chains)
    return ord_max(*bounds)


def witness_set(w: SignSeq) -> SurrealSet:
    """
    A set S with sup* S = w.

    - w empty: the empty set
    - w = u + '+': {u}
    - limit length ending in a + run of length kappa' + w: the chain
      of initial segments cut inside that final run

    Raises:
        MinusTailError: w ends in minuses and is never a sup* value.
        CofinalityGapError: the final + run ends in w^e with e > 1, which
            no omega-indexed chain reaches.
    """
    if w.is_empty:
        return SurrealSet()
    if last_sign(w) is Sign.MINUS:
        raise MinusTailError(f"{w} ends in a tail of minuses and is not a sup* value")
    head = w.runs[:-1]
    count = w.runs[-1][1]
    if ord_classify(count) is Classification.SUCCESSOR:
        u = SignSeq.from_runs(head + ((Sign.PLUS, ord_predecessor(count)),))
        return SurrealSet(elements=(u,))
    exp, coef = count.terms[-1]
    if exp != ONE:
        raise CofinalityGapError(
            f"length of {w} ends in w^{exp}; no omega-chain has it as limit"
        )
    shortened = count.terms[:-1] + (((ONE, coef - 1),) if coef > 1 else ())
    base = SignSeq.from_runs(head + ((Sign.PLUS, Ordinal(shortened)),))
    return SurrealSet(chains=(ChainSpec(base, Sign.PLUS),))


# ============= Notation =============

def set_format(S: SurrealSet) -> str:
    items = [seq_format(e) for e in S.elements] + [str(c) for c in S.chains]
    return "{" + ", ".join(items) + "}"


def set_parse(text: str) -> SurrealSet:
    """
    Parse set notation: "{-, +, chain(+^w;-)}". Braces are optional and
    an empty text is the empty set.

    Raises:
        NotationError: on malformed input.
    """
    cursor = Cursor(text)
    braced = cursor.eat("{")
    elements: List[SignSeq] = []
    chains: List[ChainSpec] = []
    if cursor.peek() not in (None, "}"):
        while True:
            _parse_item(cursor, elements, chains)
            if not cursor.eat(","):
                break
    if braced:
        cursor.expect("}")
    cursor.finish()
    return SurrealSet(elements=tuple(elements), chains=tuple(chains))


def _parse_item(cursor: Cursor, elements: List[SignSeq], chains: List[ChainSpec]) -> None:
    """item := surreal | 'chain(' surreal ';' ('+'|'-') ')'"""
    if cursor.eat("chain"):
        cursor.expect("(")
        base = parse_surreal(cursor)
        cursor.expect(";")
        if cursor.eat(Sign.PLUS.value):
            tail = Sign.PLUS
        elif cursor.eat(Sign.MINUS.value):
            tail = Sign.MINUS
        else:
            raise cursor.error("expected '+' or '-' as chain tail")
        cursor.expect(")")
        chains.append(ChainSpec(base, tail))
    else:
        elements.append(parse_surreal(cursor))
