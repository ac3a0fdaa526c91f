"""
Surreal numbers as sign sequences.

A surreal is a function from an ordinal (its length) to {+, -}. We store
it run-length encoded: a tuple of (sign, count) runs with positive ordinal
counts and alternating signs. That covers exactly the sequences with
finitely many sign changes, which is closed under everything the bounding
and separating constructions do.

Order (for s != t, gamma the first position where they differ, a missing
value counting as different):
- both defined: - < +
- s ends at gamma: s < t iff t(gamma) = +
- t ends at gamma: s < t iff s(gamma) = -
i.e. the convention "- < undefined < +".

Nothing here walks positions one by one; every operation aligns runs.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, total_ordering
from typing import Iterable, Optional, Tuple

from surreals.sign_engine.errors import TooShortError, ZeroRunError
from surreals.sign_engine.ordinal import (
    ONE,
    ZERO,
    Order,
    Ordinal,
    ord_add,
    ord_compare,
    ord_format,
    ord_left_sub,
    parse_ordinal,
    parse_term,
)
from surreals.utils.notation import Cursor


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class SignQuery(str, Enum):
    """The value of a sequence at a position; UNDEFINED from the length on."""
    PLUS = "+"
    MINUS = "-"
    UNDEFINED = "undefined"


# - < undefined < +
_RANK = {SignQuery.MINUS: -1, SignQuery.UNDEFINED: 0, SignQuery.PLUS: 1}

Run = Tuple[Sign, Ordinal]


@total_ordering
@dataclass(frozen=True, eq=True)
class SignSeq:
    """
    A surreal number as canonical runs.

    Build values with `SignSeq.from_runs` (normalizing) or `seq_parse`;
    the plain constructor checks canonical form and rejects anything else.
    """
    runs: Tuple[Run, ...] = ()

    def __post_init__(self):
        previous = None
        for sign, count in self.runs:
            if not isinstance(sign, Sign):
                raise ValueError(f"not a sign: {sign!r}")
            if count.is_zero:
                raise ValueError("run counts must be at least 1")
            if sign is previous:
                raise ValueError("adjacent runs must have different signs")
            previous = sign

    @classmethod
    def from_runs(cls, runs: Iterable[Run]) -> "SignSeq":
        """Merge equal adjacent signs by ordinal addition and drop empty runs."""
        merged = []
        for sign, count in runs:
            if count.is_zero:
                continue
            if merged and merged[-1][0] is sign:
                merged[-1] = (sign, ord_add(merged[-1][1], count))
            else:
                merged.append((sign, count))
        return cls(tuple(merged))

    @classmethod
    def of(cls, signs: str) -> "SignSeq":
        """A finite sequence from a plain string of '+' and '-'."""
        return cls.from_runs((Sign(c), ONE) for c in signs)

    @cached_property
    def length(self) -> Ordinal:
        total = ZERO
        for _, count in self.runs:
            total = ord_add(total, count)
        return total

    @property
    def is_empty(self) -> bool:
        return not self.runs

    def __lt__(self, other: "SignSeq") -> bool:
        if not isinstance(other, SignSeq):
            return NotImplemented
        return compare(self, other) is Order.LESS

    def __str__(self) -> str:
        return seq_format(self)

    def __repr__(self) -> str:
        return f"SignSeq({seq_format(self)!r})"


EMPTY = SignSeq()


def length(s: SignSeq) -> Ordinal:
    return s.length


def value_at(s: SignSeq, gamma: Ordinal) -> SignQuery:
    start = ZERO
    for sign, count in s.runs:
        end = ord_add(start, count)
        if ord_compare(gamma, end) is Order.LESS:
            return SignQuery(sign.value)
        start = end
    return SignQuery.UNDEFINED


def restrict(s: SignSeq, gamma: Ordinal) -> SignSeq:
    """
    The gamma-initial segment of s; s itself when gamma >= length(s).
    The <=gamma restriction is restrict(s, gamma + 1).
    """
    kept = []
    start = ZERO
    for sign, count in s.runs:
        if ord_compare(gamma, start) is not Order.GREATER:
            break
        end = ord_add(start, count)
        if ord_compare(gamma, end) is Order.LESS:
            kept.append((sign, ord_left_sub(start, gamma)))
            break
        kept.append((sign, count))
        start = end
    return SignSeq(tuple(kept))


def append(s: SignSeq, x: Sign) -> SignSeq:
    """s with one more sign x on top."""
    return SignSeq.from_runs(s.runs + ((x, ONE),))


def prolong(s: SignSeq, x: Sign, eta: Ordinal) -> SignSeq:
    """
    Extend s to length eta with the constant sign x.

    Raises:
        TooShortError: if eta < length(s).
    """
    order = ord_compare(eta, s.length)
    if order is Order.LESS:
        raise TooShortError(f"cannot prolong {s} of length {s.length} to {eta}")
    if order is Order.EQUAL:
        return s
    return SignSeq.from_runs(s.runs + ((x, ord_left_sub(s.length, eta)),))


def _divergence(s: SignSeq, t: SignSeq) -> Optional[Tuple[Ordinal, SignQuery, SignQuery]]:
    """
    Walk both run lists together and return (gamma, s(gamma), t(gamma)) for
    the first position where they differ, or None when s = t.
    """
    i = j = 0
    pos = ZERO
    left_s = s.runs[0][1] if s.runs else ZERO
    left_t = t.runs[0][1] if t.runs else ZERO
    while True:
        s_done, t_done = i == len(s.runs), j == len(t.runs)
        if s_done and t_done:
            return None
        if s_done:
            return pos, SignQuery.UNDEFINED, SignQuery(t.runs[j][0].value)
        if t_done:
            return pos, SignQuery(s.runs[i][0].value), SignQuery.UNDEFINED
        sign_s, sign_t = s.runs[i][0], t.runs[j][0]
        if sign_s is not sign_t:
            return pos, SignQuery(sign_s.value), SignQuery(sign_t.value)

        order = ord_compare(left_s, left_t)
        if order is Order.GREATER:
            pos = ord_add(pos, left_t)
            left_s = ord_left_sub(left_t, left_s)
            j += 1
            left_t = t.runs[j][1] if j < len(t.runs) else ZERO
            continue
        pos = ord_add(pos, left_s)
        if order is Order.LESS:
            left_t = ord_left_sub(left_s, left_t)
        else:
            j += 1
            left_t = t.runs[j][1] if j < len(t.runs) else ZERO
        i += 1
        left_s = s.runs[i][1] if i < len(s.runs) else ZERO


def first_difference(s: SignSeq, t: SignSeq) -> Optional[Ordinal]:
    """
    The least gamma with s(gamma) != t(gamma), one side undefined counting
    as different. None means s = t.
    """
    found = _divergence(s, t)
    return None if found is None else found[0]


def compare(s: SignSeq, t: SignSeq) -> Order:
    found = _divergence(s, t)
    if found is None:
        return Order.EQUAL
    _, at_s, at_t = found
    return Order.LESS if _RANK[at_s] < _RANK[at_t] else Order.GREATER


def is_initial_segment(t: SignSeq, s: SignSeq) -> bool:
    """True iff t is an initial segment of s (s is a prolongment of t)."""
    return restrict(s, t.length) == t


def negate(s: SignSeq) -> SignSeq:
    """Flip every sign; reverses the order."""
    return SignSeq(tuple((sign.opposite, count) for sign, count in s.runs))


def last_sign(s: SignSeq) -> Optional[Sign]:
    return s.runs[-1][0] if s.runs else None


def strip_minus_tail(s: SignSeq) -> SignSeq:
    if last_sign(s) is Sign.MINUS:
        return SignSeq(s.runs[:-1])
    return s


def first_position_of(s: SignSeq, x: Sign, start: Ordinal) -> Optional[Ordinal]:
    """The least gamma >= start with s(gamma) = x, or None."""
    pos = ZERO
    for sign, count in s.runs:
        end = ord_add(pos, count)
        if sign is x and ord_compare(start, end) is Order.LESS:
            return start if ord_compare(start, pos) is Order.GREATER else pos
        pos = end
    return None


# ============= Notation =============

# finite runs up to this count are spelled out ("+++"), longer ones use "^n"
SPELLED_RUN_MAX = 5


def seq_format(s: SignSeq) -> str:
    """
    Canonical text: short finite runs spelled out ("+-", "++-"), every
    other run as sign^count with a single space on each side
    ("+^w --", "+^w -^w", "+^12 -").
    """
    if s.is_empty:
        return "0"
    text = ""
    previous_spelled = True
    for sign, count in s.runs:
        spelled = count.is_finite and count.to_int() <= SPELLED_RUN_MAX
        token = sign.value * count.to_int() if spelled else f"{sign.value}^{_format_count(count)}"
        if text and not (spelled and previous_spelled):
            text += " "
        text += token
        previous_spelled = spelled
    return text


def _format_count(count: Ordinal) -> str:
    text = ord_format(count)
    return text if len(count.terms) == 1 else f"({text})"


def seq_parse(text: str) -> SignSeq:
    """
    Parse surreal notation: '0' or runs like "+^w -^3 +".

    Adjacent runs of one sign are merged by ordinal addition ("+ +^w" is +^w).

    Raises:
        NotationError: on malformed input.
        ZeroRunError: when a run count is 0.
    """
    cursor = Cursor(text)
    value = parse_surreal(cursor)
    cursor.finish()
    return value


def parse_surreal(cursor: Cursor) -> SignSeq:
    """surreal := '0' | run+ ;  run := ('+'|'-') ('^' count)?"""
    if cursor.peek() == "0":
        cursor.read_nat()
        return EMPTY
    runs = []
    while cursor.peek() in (Sign.PLUS.value, Sign.MINUS.value):
        sign = Sign(cursor.text[cursor.pos])
        cursor.pos += 1
        count = ONE
        if cursor.eat("^"):
            start = cursor.pos
            count = _parse_count(cursor)
            if count.is_zero:
                raise ZeroRunError("run count is 0", cursor.text, start)
        runs.append((sign, count))
    if not runs:
        raise cursor.error("expected '0' or a run of signs")
    return SignSeq.from_runs(runs)


def _parse_count(cursor: Cursor) -> Ordinal:
    """A single term, or any ordinal in parentheses."""
    if cursor.eat("("):
        value = parse_ordinal(cursor)
        cursor.expect(")")
        return value
    if cursor.peek() == "0":
        cursor.read_nat()
        return ZERO
    return parse_term(cursor)
