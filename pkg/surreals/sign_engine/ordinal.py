"""
Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a strictly decreasing sum of terms w^e * c with c >= 1 and
each exponent e itself an ordinal of the same kind. Only the operations
needed for lengths and positions of sign sequences are provided: the
(non-commutative) sum, left subtraction, comparison, successor/limit
classification and the ASCII notation.

Values are immutable and hashable; share them freely.
"""

from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Tuple

from surreals.sign_engine.errors import UnderflowError
from surreals.utils.notation import Cursor


class Order(str, Enum):
    """Result of a three-way comparison."""
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


class Classification(str, Enum):
    """Successor or limit; 0 counts as a limit."""
    LIMIT = "limit"
    SUCCESSOR = "successor"


Term = Tuple["Ordinal", int]


@total_ordering
@dataclass(frozen=True, eq=True)
class Ordinal:
    """
    An ordinal in Cantor normal form.

    `terms` lists (exponent, coefficient) pairs with strictly decreasing
    exponents; the empty tuple is 0. Equality is structural, which is
    ordinal equality because the normal form is unique.
    """
    terms: Tuple[Term, ...] = ()

    @classmethod
    def finite(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError(f"negative ordinal {n}")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def term(cls, exponent: "Ordinal", coefficient: int = 1) -> "Ordinal":
        """The single term w^exponent * coefficient."""
        if coefficient < 1:
            raise ValueError(f"coefficient must be positive, got {coefficient}")
        return cls(((exponent, coefficient),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    def to_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_compare(self, other) is Order.LESS

    def __add__(self, other: "Ordinal") -> "Ordinal":
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_add(self, other)

    def __str__(self) -> str:
        return ord_format(self)

    def __repr__(self) -> str:
        return f"Ordinal({ord_format(self)})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def ord_compare(a: Ordinal, b: Ordinal) -> Order:
    """Lexicographic comparison of normal forms: exponent, coefficient, then tail."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        order = ord_compare(ea, eb)
        if order is not Order.EQUAL:
            return order
        if ca != cb:
            return Order.LESS if ca < cb else Order.GREATER
    if len(a.terms) == len(b.terms):
        return Order.EQUAL
    return Order.LESS if len(a.terms) < len(b.terms) else Order.GREATER


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """
    Ordinal sum a + b.

    Terms of `a` below the leading exponent of `b` are absorbed; a term of
    `a` with exactly that exponent merges its coefficient with b's leader.
    """
    if b.is_zero:
        return a
    lead_exp, lead_coef = b.terms[0]
    kept = []
    for exp, coef in a.terms:
        order = ord_compare(exp, lead_exp)
        if order is Order.GREATER:
            kept.append((exp, coef))
        elif order is Order.EQUAL:
            kept.append((exp, coef + lead_coef))
            return Ordinal(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def ord_left_sub(a: Ordinal, b: Ordinal) -> Ordinal:
    """
    The unique g with a + g = b.

    Raises:
        UnderflowError: if a > b.
    """
    if ord_compare(a, b) is Order.GREATER:
        raise UnderflowError(f"cannot subtract {a} from the smaller {b}")
    i = 0
    while i < len(a.terms) and a.terms[i] == b.terms[i]:
        i += 1
    if i == len(a.terms):
        return Ordinal(b.terms[i:])
    (ea, ca), (eb, cb) = a.terms[i], b.terms[i]
    if ord_compare(ea, eb) is Order.EQUAL:
        # same exponent, so cb > ca because a < b
        return Ordinal(((eb, cb - ca),) + b.terms[i + 1:])
    return Ordinal(b.terms[i:])


def ord_classify(a: Ordinal) -> Classification:
    if a.terms and a.terms[-1][0].is_zero:
        return Classification.SUCCESSOR
    return Classification.LIMIT


def ord_predecessor(a: Ordinal) -> Ordinal:
    """
    The b with b + 1 = a.

    Raises:
        UnderflowError: if a is a limit (including 0).
    """
    if ord_classify(a) is not Classification.SUCCESSOR:
        raise UnderflowError(f"{a} is a limit ordinal and has no predecessor")
    exp, coef = a.terms[-1]
    head = a.terms[:-1]
    return Ordinal(head + ((exp, coef - 1),)) if coef > 1 else Ordinal(head)


def ord_max(*values: Ordinal) -> Ordinal:
    best = ZERO
    for value in values:
        if ord_compare(value, best) is Order.GREATER:
            best = value
    return best


# ============= Notation =============

def ord_format(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    return "+".join(_format_term(exp, coef) for exp, coef in a.terms)


def _format_term(exp: Ordinal, coef: int) -> str:
    if exp.is_zero:
        return str(coef)
    if exp == ONE:
        text = "w"
    elif exp.is_finite or exp == OMEGA:
        text = f"w^{ord_format(exp)}"
    else:
        text = f"w^({ord_format(exp)})"
    return text if coef == 1 else f"{text}*{coef}"


def ord_parse(text: str) -> Ordinal:
    """
    Parse ASCII Cantor-normal-form notation.

    Non-canonical sums are normalized by ordinal addition, left to right,
    so "w+w^2" is w^2.

    Raises:
        NotationError: on malformed input, with the failing position.
    """
    cursor = Cursor(text)
    value = parse_ordinal(cursor)
    cursor.finish()
    return value


def parse_ordinal(cursor: Cursor) -> Ordinal:
    """ordinal := term ('+' term)* | '0'"""
    if cursor.peek() == "0":
        start = cursor.pos
        cursor.read_nat()
        if cursor.peek() == "+" and _plus_starts_term(cursor):
            raise cursor.error("0 cannot be a summand", start)
        return ZERO
    value = parse_term(cursor)
    while _plus_starts_term(cursor):
        cursor.expect("+")
        value = ord_add(value, parse_term(cursor))
    return value


def _plus_starts_term(cursor: Cursor) -> bool:
    """A '+' continues the sum only when a term follows it."""
    if cursor.peek() != "+":
        return False
    nxt = cursor.pos + 1
    while nxt < len(cursor.text) and cursor.text[nxt].isspace():
        nxt += 1
    return nxt < len(cursor.text) and (cursor.text[nxt].isdigit() or cursor.text[nxt] == "w")


def parse_term(cursor: Cursor) -> Ordinal:
    """term := nat | 'w' ('^' atom)? ('*' nat)?"""
    char = cursor.peek()
    if char is not None and char.isdigit():
        start = cursor.pos
        n = cursor.read_nat()
        if n == 0:
            raise cursor.error("0 cannot be a summand", start)
        return Ordinal.finite(n)
    if not cursor.eat("w"):
        raise cursor.error("expected a number or 'w'")
    exp = ONE
    if cursor.eat("^"):
        exp = _parse_atom(cursor)
    coef = 1
    if cursor.eat("*"):
        start = cursor.pos
        coef = cursor.read_nat()
        if coef == 0:
            raise cursor.error("coefficient must be positive", start)
    if exp.is_zero:
        return Ordinal.finite(coef)
    return Ordinal.term(exp, coef)


def _parse_atom(cursor: Cursor) -> Ordinal:
    """atom := nat | 'w' | '(' ordinal ')'"""
    char = cursor.peek()
    if char is not None and char.isdigit():
        start = cursor.pos
        n = cursor.read_nat()
        if n == 0:
            raise cursor.error("exponent 0 must be written as a number", start)
        return Ordinal.finite(n)
    if cursor.eat("w"):
        return OMEGA
    if cursor.eat("("):
        value = parse_ordinal(cursor)
        cursor.expect(")")
        return value
    raise cursor.error("expected an exponent")
