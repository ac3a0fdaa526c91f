"""
Unit tests for Cantor-normal-form ordinals.

Covers the notation, the non-commutative sum, left subtraction and the
successor/limit split used by the witness construction.
"""

import pytest
from hypothesis import given

from surreals.sign_engine.errors import NotationError, UnderflowError
from surreals.sign_engine.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Classification,
    Order,
    Ordinal,
    ord_add,
    ord_classify,
    ord_compare,
    ord_format,
    ord_left_sub,
    ord_max,
    ord_parse,
    ord_predecessor,
)
from tests.strategies import s_ordinals, s_positive_ordinals


def w_times(n: int) -> Ordinal:
    return Ordinal.term(ONE, n)


class TestOrdinalNotation:
    """Parsing and canonical formatting."""

    @pytest.mark.parametrize("text", ["0", "7", "w", "w+1", "w*2", "w^2*3+w+4", "w^w", "w^(w+1)*2+5"])
    def test_canonical_text_round_trips(self, text):
        assert ord_format(ord_parse(text)) == text

    def test_non_canonical_sum_is_normalized(self):
        """w + w^2 absorbs the smaller term on the left."""
        assert ord_parse("w+w^2") == ord_parse("w^2")
        assert ord_parse("1+w") == OMEGA
        assert ord_parse("w+w") == w_times(2)

    def test_whitespace_is_allowed_between_tokens(self):
        assert ord_parse(" w ^ 2 + 3 ") == ord_parse("w^2+3")

    @pytest.mark.parametrize("text", ["", "0+1", "01", "w^0", "w*0", "x", "w+", "w^"])
    def test_malformed_text_raises(self, text):
        with pytest.raises(NotationError):
            ord_parse(text)

    def test_error_reports_position(self):
        with pytest.raises(NotationError) as info:
            ord_parse("w+x")
        assert info.value.position == 1
        assert info.value.rule == "syntax"


class TestOrdinalArithmetic:
    """Sum, left subtraction and comparison."""

    def test_finite_prefix_is_absorbed(self):
        assert ord_add(ONE, OMEGA) == OMEGA
        assert ord_add(OMEGA, ONE) != OMEGA

    def test_equal_exponents_merge(self):
        assert ord_add(ord_parse("w*2+3"), ord_parse("w+1")) == ord_parse("w*3+1")

    def test_operator_sugar(self):
        assert OMEGA + ONE == ord_parse("w+1")
        assert ONE < OMEGA
        assert sorted([OMEGA, ZERO, ONE]) == [ZERO, ONE, OMEGA]

    def test_left_subtraction(self):
        assert ord_left_sub(ONE, OMEGA) == OMEGA
        assert ord_left_sub(ord_parse("w+1"), w_times(2)) == OMEGA
        assert ord_left_sub(ord_parse("w+3"), ord_parse("w+5")) == Ordinal.finite(2)
        assert ord_left_sub(OMEGA, OMEGA) == ZERO

    def test_left_subtraction_underflow(self):
        with pytest.raises(UnderflowError):
            ord_left_sub(OMEGA, Ordinal.finite(5))

    def test_compare_is_lexicographic_on_normal_form(self):
        assert ord_compare(ord_parse("w^2"), ord_parse("w*9+9")) is Order.GREATER
        assert ord_compare(ord_parse("w+1"), ord_parse("w+1")) is Order.EQUAL
        assert ord_compare(ord_parse("w^w"), ord_parse("w^(w+1)")) is Order.LESS

    def test_max(self):
        assert ord_max() == ZERO
        assert ord_max(ONE, OMEGA, Ordinal.finite(4)) == OMEGA

    @given(s_ordinals)
    def test_format_reparses(self, a):
        assert ord_parse(ord_format(a)) == a

    @given(s_ordinals, s_ordinals)
    def test_compare_is_antisymmetric(self, a, b):
        forward, backward = ord_compare(a, b), ord_compare(b, a)
        assert (forward is Order.EQUAL) == (a == b)
        assert {forward, backward} in ({Order.EQUAL}, {Order.LESS, Order.GREATER})

    @given(s_ordinals, s_ordinals, s_ordinals)
    def test_compare_is_transitive(self, a, b, c):
        if ord_compare(a, b) is Order.LESS and ord_compare(b, c) is Order.LESS:
            assert ord_compare(a, c) is Order.LESS

    @given(s_ordinals, s_ordinals, s_ordinals)
    def test_sum_is_associative(self, a, b, c):
        assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))

    @given(s_ordinals, s_ordinals)
    def test_left_subtraction_inverts_sum(self, a, b):
        assert ord_left_sub(a, ord_add(a, b)) == b

    @given(s_ordinals, s_positive_ordinals)
    def test_adding_a_positive_ordinal_grows(self, a, b):
        assert a < ord_add(a, b)
        assert b <= ord_add(a, b)


class TestClassification:
    """Successor versus limit."""

    @pytest.mark.parametrize("text,expected", [
        ("0", Classification.LIMIT),
        ("3", Classification.SUCCESSOR),
        ("w", Classification.LIMIT),
        ("w+1", Classification.SUCCESSOR),
        ("w^2*2", Classification.LIMIT),
    ])
    def test_classify(self, text, expected):
        assert ord_classify(ord_parse(text)) is expected

    def test_predecessor(self):
        assert ord_predecessor(ord_parse("w+1")) == OMEGA
        assert ord_predecessor(ord_parse("w^2+2")) == ord_parse("w^2+1")
        assert ord_predecessor(ONE) == ZERO

    @pytest.mark.parametrize("text", ["0", "w", "w^2"])
    def test_limit_has_no_predecessor(self, text):
        with pytest.raises(UnderflowError):
            ord_predecessor(ord_parse(text))
