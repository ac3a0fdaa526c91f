"""
Unit tests for run-encoded sign sequences.

Tests the order convention (- < undefined < +), restriction and
prolongment, the first-difference alignment and the four structural
properties of restriction that the bounding results lean on.
"""

import itertools

import pytest
from hypothesis import assume, given

from surreals.sign_engine import oracle
from surreals.sign_engine.errors import NotationError, TooShortError, ZeroRunError
from surreals.sign_engine.ordinal import OMEGA, ONE, ZERO, Order, Ordinal, ord_add, ord_parse
from surreals.sign_engine.sign_seq import (
    EMPTY,
    Sign,
    SignQuery,
    SignSeq,
    append,
    compare,
    first_difference,
    first_position_of,
    is_initial_segment,
    last_sign,
    negate,
    prolong,
    restrict,
    seq_parse,
    strip_minus_tail,
    value_at,
)
from tests.strategies import s_surreals, sample_positions


FINITE_4 = ["".join(p) for n in range(5) for p in itertools.product("-+", repeat=n)]


class TestNotation:
    """Surreal notation in and out."""

    @pytest.mark.parametrize("text,expected", [
        ("0", "0"),
        ("+-+", "+-+"),
        ("+ - +", "+-+"),
        ("+^3 -", "+++-"),
        ("+^w -^3 +", "+^w ---+"),
        ("+^w -^w", "+^w -^w"),
        ("+^(w+3) -", "+^(w+3) -"),
        ("+ +^w", "+^w"),
        ("-^w^2", "-^w^2"),
        ("+^5", "+++++"),
        ("+^6", "+^6"),
        ("+^12 -", "+^12 -"),
        ("-^1000000000000", "-^1000000000000"),
    ])
    def test_canonical_output(self, text, expected):
        assert str(seq_parse(text)) == expected

    @given(s_surreals)
    def test_output_reparses(self, s):
        assert seq_parse(str(s)) == s

    def test_zero_run_is_rejected(self):
        with pytest.raises(ZeroRunError) as info:
            seq_parse("+^0")
        assert info.value.rule == "zero-run"

    @pytest.mark.parametrize("text", ["", "+^", "+x", "0+", "+^(w"])
    def test_malformed(self, text):
        with pytest.raises(NotationError):
            seq_parse(text)

    def test_constructor_rejects_non_canonical_runs(self):
        with pytest.raises(ValueError):
            SignSeq(((Sign.PLUS, ONE), (Sign.PLUS, ONE)))
        with pytest.raises(ValueError):
            SignSeq(((Sign.PLUS, ZERO),))


class TestPositions:
    """Length, value_at, restrict and prolong."""

    def test_length_is_the_ordinal_sum_of_runs(self):
        assert seq_parse("+^w -^3 +").length == ord_parse("w+4")
        assert seq_parse("-^3 +^w").length == OMEGA
        assert EMPTY.length == ZERO

    def test_value_at(self):
        s = seq_parse("+^w -^3")
        assert value_at(s, ZERO) is SignQuery.PLUS
        assert value_at(s, Ordinal.finite(100)) is SignQuery.PLUS
        assert value_at(s, OMEGA) is SignQuery.MINUS
        assert value_at(s, ord_parse("w+3")) is SignQuery.UNDEFINED

    def test_restrict(self):
        s = seq_parse("+^w -^3")
        assert restrict(s, ZERO) == EMPTY
        assert restrict(s, Ordinal.finite(2)) == seq_parse("++")
        assert restrict(s, ord_parse("w+1")) == seq_parse("+^w -")
        assert restrict(s, ord_parse("w^2")) == s

    def test_prolong(self):
        assert prolong(seq_parse("+"), Sign.MINUS, OMEGA) == seq_parse("+ -^w")
        assert prolong(seq_parse("+^w"), Sign.PLUS, ord_parse("w*2")) == seq_parse("+^(w*2)")
        s = seq_parse("+-")
        assert prolong(s, Sign.PLUS, Ordinal.finite(2)) is s

    def test_prolong_below_length_raises(self):
        with pytest.raises(TooShortError):
            prolong(seq_parse("+^w"), Sign.MINUS, Ordinal.finite(3))

    def test_append_merges_with_last_run(self):
        assert append(seq_parse("+^w"), Sign.PLUS) == seq_parse("+^(w+1)")

    def test_first_position_of(self):
        s = seq_parse("+^w -^3 +")
        assert first_position_of(s, Sign.MINUS, ZERO) == OMEGA
        assert first_position_of(s, Sign.PLUS, ord_parse("w+1")) == ord_parse("w+3")
        assert first_position_of(s, Sign.PLUS, Ordinal.finite(5)) == Ordinal.finite(5)
        assert first_position_of(s, Sign.MINUS, ord_parse("w+3")) is None

    def test_tails(self):
        assert last_sign(EMPTY) is None
        assert last_sign(seq_parse("+ -^w")) is Sign.MINUS
        assert strip_minus_tail(seq_parse("+^w -^3")) == seq_parse("+^w")
        assert strip_minus_tail(seq_parse("+-+")) == seq_parse("+-+")


class TestOrder:
    """The sign-sequence order."""

    @pytest.mark.parametrize("a,b", [
        ("-", "0"),
        ("0", "+"),
        ("+-", "+"),
        ("+", "+ +"),
        ("+^w -", "+^w"),
        ("+^w", "+^w +"),
        ("+^5", "+^w"),
        ("+^w -^w", "+^w -^3"),
    ])
    def test_strictly_less(self, a, b):
        assert compare(seq_parse(a), seq_parse(b)) is Order.LESS
        assert compare(seq_parse(b), seq_parse(a)) is Order.GREATER
        assert seq_parse(a) < seq_parse(b)

    def test_first_difference(self):
        assert first_difference(seq_parse("+^w -"), seq_parse("+^w")) == OMEGA
        assert first_difference(seq_parse("+-"), seq_parse("++")) == ONE
        assert first_difference(seq_parse("+^w"), seq_parse("+^w")) is None

    def test_initial_segment(self):
        assert is_initial_segment(seq_parse("+^w"), seq_parse("+^w -"))
        assert not is_initial_segment(seq_parse("+^w -"), seq_parse("+^w"))
        assert is_initial_segment(EMPTY, seq_parse("-"))

    def test_agrees_with_naive_compare_on_short_sequences(self):
        for a, b in itertools.product(FINITE_4, repeat=2):
            assert compare(SignSeq.of(a), SignSeq.of(b)) is oracle.naive_compare(a, b)

    @given(s_surreals, s_surreals)
    def test_negate_reverses_order(self, s, t):
        assert negate(negate(s)) == s
        assert compare(negate(t), negate(s)) is compare(s, t)

    def test_exhaustive_finite_triples(self):
        """Trichotomy and transitivity over every triple of length <= 3."""
        short = [SignSeq.of(flat) for flat in oracle.enumerate_surreals(3)]
        for s, t in itertools.product(short, repeat=2):
            assert [s < t, s == t, t < s].count(True) == 1
        for s, t, u in itertools.product(short, repeat=3):
            if s < t and t < u:
                assert s < u

    @given(s_surreals, s_surreals, s_surreals)
    def test_order_is_transitive(self, s, t, u):
        assume(s < t and t < u)
        assert s < u


class TestRestrictionProperties:
    """
    The four structural properties of restriction, checked at every
    position where a comparison can change.
    """

    def _check_pair(self, s, t):
        points = sample_positions(s, t)
        gamma = first_difference(s, t)
        if gamma is not None:
            points.append(ord_add(gamma, ONE))
            # (1) equal below the first difference, both defined there
            assert restrict(s, gamma) == restrict(t, gamma)
            for p in points:
                if p < gamma:
                    assert value_at(s, p) is not SignQuery.UNDEFINED
                    assert value_at(t, p) is not SignQuery.UNDEFINED
        for p in points:
            # (2) restriction is monotone
            if s <= t:
                assert restrict(s, p) <= restrict(t, p)
            # (3) a strict difference of restrictions persists
            if restrict(s, p) < restrict(t, p):
                assert s < t
                for q in points:
                    if q >= p:
                        assert restrict(s, q) < restrict(t, q)
        # (4) pointwise <= up to alpha gives <=
        alpha = max(s.length, t.length)
        below = [p for p in points if p < alpha]
        if gamma is not None:
            below.append(gamma)
        if all(restrict(s, ord_add(p, ONE)) <= restrict(t, ord_add(p, ONE)) for p in below):
            assert s <= t

    def test_exhaustive_finite_pairs(self):
        for a, b in itertools.product(FINITE_4, repeat=2):
            self._check_pair(SignSeq.of(a), SignSeq.of(b))

    @given(s_surreals, s_surreals)
    def test_random_transfinite_pairs(self, s, t):
        self._check_pair(s, t)
