import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from farey_primitives.words import (
    IDENTITY,
    Word,
    concat,
    cyclic_equal,
    cyclic_reduce,
    exponent_sums,
    invert,
    is_palindrome,
    normalize,
    palindromic_rotation_count,
    parse_word,
    power,
    reverse,
    substitute,
)

A, Ai, B, Bi = 1, -1, 2, -2


def w(text: str) -> Word:
    return parse_word(text)


# deterministic letter-sequence strategy over the 4-letter alphabet
letters = st.lists(st.sampled_from([A, Ai, B, Bi]), max_size=24)
words = letters.map(Word)


def random_palindrome(half: list[int], center: int | None) -> Word:
    seq = list(half)
    if center is not None:
        seq.append(center)
    seq.extend(reversed(half))
    word = Word(seq)
    # free reduction can break mirror symmetry; keep only honest palindromes
    return word if word.is_palindrome() else Word()


palindromes = st.builds(
    random_palindrome,
    st.lists(st.sampled_from([A, Ai, B, Bi]), max_size=8),
    st.one_of(st.none(), st.sampled_from([A, Ai, B, Bi])),
)


class TestNormalize:
    def test_inverse_pair_cancels(self):
        assert normalize([A, B, Bi, A]) == w("a^2")

    def test_triple_cancellation(self):
        assert normalize([B, B, B, Bi, Bi, Bi, A]) == w("a")

    def test_empty(self):
        assert normalize([]) == IDENTITY

    def test_rejects_bad_codes(self):
        with pytest.raises(ValueError):
            Word((3,))

    @given(letters)
    def test_idempotent(self, ls):
        word = Word(ls)
        assert Word(word.letters) == word


class TestConcat:
    def test_table_product(self):
        assert w("A") * w("b A") == w("A b A")

    def test_identity_neutral(self):
        word = w("b A b^3")
        assert word * IDENTITY == word
        assert IDENTITY * word == word

    def test_interior_cancellation(self):
        assert w("a b") * w("B a") == w("a^2")

    @given(words, words, words)
    def test_associative(self, u, v, x):
        assert (u * v) * x == u * (v * x)

    @given(words, words)
    def test_inverse_antihomomorphism(self, u, v):
        assert ~(u * v) == ~v * ~u


class TestInvert:
    def test_reverse_and_flip(self):
        assert invert(w("b A b^3")) == w("B^-3 a B")

    def test_identity(self):
        assert invert(IDENTITY) == IDENTITY

    def test_involution(self):
        word = w("A b A^-2")
        assert invert(invert(word)) == word

    @given(words)
    def test_inverse_cancels(self, u):
        assert u * ~u == IDENTITY


class TestReverse:
    def test_simple(self):
        assert reverse(w("A b A^-2")) == w("A^-2 b A")

    def test_palindrome_fixed(self):
        assert reverse(w("A b A")) == w("A b A")

    def test_identity(self):
        assert reverse(IDENTITY) == IDENTITY

    @given(words)
    def test_reverse_of_reduced_is_reduced(self, u):
        rev = u.reverse()
        assert Word(rev.letters) == rev
        assert rev.reverse() == u


class TestPalindromes:
    def test_even_scheme_word(self):
        assert is_palindrome(w("A^-2 b A^-3 b A^-2"))

    def test_non_palindrome(self):
        assert not is_palindrome(w("b A"))

    def test_identity(self):
        assert is_palindrome(IDENTITY)

    @given(palindromes)
    def test_palindromes_cyclically_reduced(self, p):
        assert p.is_cyclically_reduced()

    @given(palindromes, palindromes, st.integers(min_value=1, max_value=4))
    def test_palindrome_closure(self, x, y, t):
        # (XY)^t X is a palindrome for palindromic X, Y
        assert is_palindrome((x * y) ** t * x)


class TestCyclicReduce:
    def test_conjugate(self):
        core, conj = cyclic_reduce(w("A b a"))
        assert core == w("b") and conj == w("A")

    def test_already_reduced(self):
        core, conj = cyclic_reduce(w("A b A"))
        assert core == w("A b A") and conj == IDENTITY

    @given(words)
    def test_decomposition_identity(self, u):
        core, conj = cyclic_reduce(u)
        assert conj * core * ~conj == u
        assert core.is_cyclically_reduced()
        assert u.letters[: len(conj)] == conj.letters


class TestCyclicEqual:
    def test_conjugate_of_letter(self):
        assert cyclic_equal(w("A b a"), w("b"))

    def test_rotation(self):
        assert cyclic_equal(w("a b"), w("b a"))

    def test_unequal_lengths(self):
        assert not cyclic_equal(w("a"), w("a^2"))

    def test_same_length_not_conjugate(self):
        assert not cyclic_equal(w("a b"), w("a B"))

    @given(words, st.integers(min_value=0, max_value=20))
    def test_rotation_invariance(self, u, i):
        core, _ = cyclic_reduce(u)
        assert cyclic_equal(u, core.rotation(i))

    @given(words, words)
    def test_conjugation_invariance(self, u, g):
        assert cyclic_equal(u, g * u * ~g)


class TestExponentSums:
    def test_scheme_word(self):
        assert exponent_sums(w("A b A^-3 b A")) == (-5, 2)

    def test_identity(self):
        assert exponent_sums(IDENTITY) == (0, 0)

    def test_negative_base(self):
        assert exponent_sums(w("b a")) == (1, 1)

    @given(words, words)
    def test_additive(self, u, v):
        ua, ub = exponent_sums(u)
        va, vb = exponent_sums(v)
        assert exponent_sums(u * v) == (ua + va, ub + vb)


class TestPower:
    def test_fourth_power_length(self):
        word = power(w("b A b^3 A b^3"), 4)
        assert len(word) == 36

    def test_zero(self):
        assert power(w("a b"), 0) == IDENTITY

    def test_negative(self):
        assert power(w("a"), -2) == w("A^-2")

    @given(words, st.integers(min_value=-4, max_value=4))
    def test_matches_repeated_product(self, u, t):
        expected = IDENTITY
        step = u if t >= 0 else ~u
        for _ in range(abs(t)):
            expected = expected * step
        assert u**t == expected


class TestSubstitute:
    def test_swap_generators(self):
        assert substitute(w("a b"), w("b"), w("a")) == w("b a")

    def test_identity_substitution(self):
        word = w("A b A^-2")
        assert substitute(word, w("a"), w("b")) == word

    def test_sign_flip(self):
        assert substitute(w("A b"), w("A"), w("b")) == w("a b")

    @given(words, words, words)
    def test_endomorphism(self, u, v, img):
        # substitution is a homomorphism in the word argument
        assert substitute(u * v, img, w("b")) == substitute(u, img, w("b")) * substitute(
            v, img, w("b")
        )


def brute_palindromic_rotations(word: Word) -> int:
    n = len(word)
    if n == 0:
        return 1
    count = 0
    for i in range(n):
        rot = word.letters[i:] + word.letters[:i]
        if rot == rot[::-1]:
            count += 1
    return count


class TestPalindromicRotationCount:
    @given(words)
    def test_matches_brute_force(self, u):
        core, _ = cyclic_reduce(u)
        assert palindromic_rotation_count(core) == brute_palindromic_rotations(core)

    def test_requires_cyclically_reduced(self):
        with pytest.raises(ValueError):
            palindromic_rotation_count(w("A b a"))


class TestTextFormat:
    @pytest.mark.parametrize(
        "text,compact",
        [
            ("A^-2 b A^-3 b A^-2", "AAbAAAbAA"),
            ("A^2 b A^3 b A^2", "AAbAAAbAA"),
            ("AAbAAAbAA", "AAbAAAbAA"),
            ("b a", "ba"),
            ("1", "1"),
            ("A . b A", "AbA"),
            ("b^3 B^-3 a", "a"),
        ],
    )
    def test_parse_variants(self, text, compact):
        assert parse_word(text).compact() == compact

    @pytest.mark.parametrize("bad", ["", "c", "a^", "a^x", "2a", "a ^2"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_word(bad)

    @given(words)
    def test_round_trip_caret(self, u):
        assert parse_word(str(u)) == u

    @given(words)
    def test_round_trip_compact(self, u):
        assert parse_word(u.compact()) == u

    def test_caret_style_matches_convention(self):
        assert str(w("AAbAAAbAA")) == "A^-2 b A^-3 b A^-2"
        assert str(IDENTITY) == "1"


@settings(max_examples=200)
@given(letters, letters)
def test_concat_equals_normalize_of_concatenation(ls1, ls2):
    assert Word(ls1) * Word(ls2) == normalize(list(ls1) + list(ls2))


@given(words)
def test_concat_variadic(u):
    assert concat(u, ~u, u) == u
