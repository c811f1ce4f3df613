import pytest
from hypothesis import given
from hypothesis import strategies as st

from farey_primitives.enumeration import enumerate_word
from farey_primitives.fsequence import (
    START_PAIR,
    FormReport,
    NoFormError,
    Quadrant,
    apply_sequence,
    classify_form,
    conjugacy_bridge,
    cyclic_exponent_gaps_ok,
    fword,
    interior_exponent_gaps_ok,
    quadrant_of,
    reverse_negate,
    unwind_step,
    wind_step,
)
from farey_primitives.rationals import (
    INFINITY,
    ZERO,
    parse_fraction,
    rationals_by_level,
    to_cf,
)
from farey_primitives.words import Word, cyclic_equal, parse_word

a, b = START_PAIR

words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8).map(Word)


def w(text: str):
    return parse_word(text)


def r(text: str):
    return parse_fraction(text)


def fsequences(max_sum: int):
    def rec(remaining, prefix):
        yield prefix
        for nxt in range(1, remaining + 1):
            yield from rec(remaining - nxt, prefix + (nxt,))

    for a0 in range(0, max_sum + 1):
        yield from rec(max_sum - a0, (a0,))


class TestSteps:
    def test_unwind_examples(self):
        assert unwind_step((a, b), 3) == (w("B"), w("A b^3"))
        assert unwind_step((w("B"), w("A b^3")), 2) == (w("B^-3 a"), w("b A b^3 A b^3"))
        assert unwind_step((a, b), 0) == (w("B"), w("A"))

    def test_wind_examples(self):
        assert wind_step((a, b), 1) == (w("A B"), w("A"))
        with pytest.raises(ValueError):
            wind_step((a, b), 0)

    @given(st.tuples(words, words), st.integers(min_value=1, max_value=5))
    def test_wind_inverts_unwind(self, pair, q):
        assert wind_step(unwind_step(pair, q), q) == pair


class TestWorkedExample:
    def test_forward_chain(self):
        pairs = apply_sequence(START_PAIR, [3, 2, 4])
        assert pairs[0] == (w("B"), w("A b^3"))
        assert pairs[1] == (w("B^-3 a"), w("b A b^3 A b^3"))
        expected_b3 = w("A b^3") * w("b A b^3 A b^3") ** 4
        assert pairs[2] == (w("B^-3 a B^-3 a B"), expected_b3)

    def test_backward_chain(self):
        forward = apply_sequence(START_PAIR, [3, 2, 4])
        back = apply_sequence(forward[-1], [-4, -2, -3])
        assert back[0] == (w("B^-3 a"), w("b A b^3 A b^3"))
        assert back[1] == (w("B"), w("A b^3"))
        assert back[2] == START_PAIR

    def test_single_step_sequences(self):
        assert apply_sequence(START_PAIR, [1]) == [(w("B"), w("A b"))]
        assert apply_sequence(START_PAIR, [0]) == [(w("B"), w("A"))]


class TestApplySequenceValidation:
    def test_mixed_signs_rejected(self):
        with pytest.raises(ValueError):
            apply_sequence(START_PAIR, [3, -2])

    def test_zero_positions(self):
        apply_sequence(START_PAIR, [0, 2])
        apply_sequence(START_PAIR, [-2, 0])
        with pytest.raises(ValueError):
            apply_sequence(START_PAIR, [2, 0])
        with pytest.raises(ValueError):
            apply_sequence(START_PAIR, [0, -2])
        with pytest.raises(ValueError):
            apply_sequence(START_PAIR, [])


class TestFword:
    def test_paper_fword(self):
        assert fword([3, 2, 4]) == w("A b^3") * w("b A b^3 A b^3") ** 4

    def test_small(self):
        assert fword([1]) == w("A b")
        assert fword([3, 2]) == w("b A b^3 A b^3")

    def test_negative_sequences_use_uniform_steps(self):
        assert fword([-1]) == w("A B")
        assert fword([0, -2]) == w("b a^2")


class TestReverseNegate:
    def test_example(self):
        assert reverse_negate([3, 2, 4]) == (-4, -2, -3)

    def test_empty(self):
        assert reverse_negate([]) == ()

    def test_involution(self):
        assert reverse_negate(reverse_negate([1, 5])) == (1, 5)


class TestRoundTrips:
    def test_exhaustive_entry_sum_8(self):
        for seq in fsequences(8):
            pairs = apply_sequence(START_PAIR, seq)
            back = apply_sequence(pairs[-1], reverse_negate(seq))
            assert back[-1] == START_PAIR, seq

    def test_recurrences(self):
        for seq in fsequences(7):
            chain = [START_PAIR] + apply_sequence(START_PAIR, seq)
            for t in range(1, len(seq)):
                assert chain[t + 1][0] == ~chain[t][1]
                assert chain[t + 1][1] == chain[t - 1][1] * chain[t][1] ** seq[t]


class TestClassifyForm:
    def test_paper_fword_blocks(self):
        rep = classify_form(fword([3, 2, 4]))
        assert rep.quadrant is Quadrant.GT1
        assert rep.block_generator == 2 and rep.unit_generator == 1
        assert rep.epsilon == 1
        assert rep.exponents == (4, 3, 4, 3, 4, 3, 4, 3, 3)
        assert sum(rep.exponents) == 31

    def test_negative_base_word(self):
        # E(-1/1) = ba sits on the -1 boundary, which the four-form ranges
        # assign to the [-1, 0) family (blocks on a, matching signs)
        rep = classify_form(w("b a"))
        assert rep.quadrant is Quadrant.MINUS_ONE_TO_ZERO
        assert rep.exponents == (1,)

    def test_no_form(self):
        with pytest.raises(NoFormError):
            classify_form(w("a b a B"))
        with pytest.raises(NoFormError):
            classify_form(w("a^2 b^2"))
        with pytest.raises(ValueError):
            classify_form(w("1"))

    @pytest.mark.parametrize(
        "frac,quadrant",
        [
            ("2/1", Quadrant.GT1),
            ("3/2", Quadrant.GT1),
            ("1/1", Quadrant.ZERO_TO_ONE),
            ("1/2", Quadrant.ZERO_TO_ONE),
            ("-2/1", Quadrant.LT_MINUS1),
            ("-3/2", Quadrant.LT_MINUS1),
            ("-1/1", Quadrant.MINUS_ONE_TO_ZERO),
            ("-1/2", Quadrant.MINUS_ONE_TO_ZERO),
        ],
    )
    def test_scheme_word_quadrants(self, frac, quadrant):
        assert classify_form(enumerate_word(r(frac))).quadrant is quadrant
        assert quadrant_of(r(frac)) is quadrant

    def test_epsilon_tracks_block_sign(self):
        assert classify_form(enumerate_word(r("7/2"))).epsilon == 1
        assert classify_form(enumerate_word(r("2/7"))).epsilon == -1
        assert classify_form(enumerate_word(r("-7/2"))).epsilon == 1

    def test_gap_laws_on_scheme_words(self):
        for sign in ("pos", "neg"):
            for x in rationals_by_level(8, sign):
                word = enumerate_word(x)
                rep = classify_form(word)
                assert rep.quadrant is quadrant_of(x)
                assert interior_exponent_gaps_ok(rep.exponents), x
                wraps = (
                    abs(word.letters[0]) == rep.block_generator
                    and abs(word.letters[-1]) == rep.block_generator
                )
                assert cyclic_exponent_gaps_ok(rep.exponents, wraps), x

    def test_boundary_gap_can_be_two(self):
        # E(2/5) = A b A^-3 b A has blocks (1, 3, 1): the relaxed boundary
        # exponents differ from their neighbors by 2, the interior is empty
        rep = classify_form(enumerate_word(r("2/5")))
        assert rep.exponents == (1, 3, 1)
        assert interior_exponent_gaps_ok(rep.exponents)


class TestConjugacyBridge:
    def test_31_9(self):
        assert conjugacy_bridge(r("31/9"))

    def test_1_2(self):
        # E = A b A, sequence word of [0;2] is b A^-2: rotation equality
        assert fword(to_cf(r("1/2"))) == w("b A^-2")
        assert cyclic_equal(enumerate_word(r("1/2")), w("b A^-2"))
        assert conjugacy_bridge(r("1/2"))

    def test_excluded_endpoints(self):
        with pytest.raises(ValueError):
            conjugacy_bridge(INFINITY)
        with pytest.raises(ValueError):
            conjugacy_bridge(ZERO)

    def test_exhaustive_level_6(self):
        for sign in ("pos", "neg"):
            for x in rationals_by_level(6, sign):
                assert conjugacy_bridge(x), x

    def test_abelianization_matches_up_to_sign(self):
        for sign in ("pos", "neg"):
            for x in rationals_by_level(6, sign):
                es = enumerate_word(x).exponent_sums()
                fs = fword(to_cf(x)).exponent_sums()
                assert fs == es or fs == (-es[0], -es[1]), x
