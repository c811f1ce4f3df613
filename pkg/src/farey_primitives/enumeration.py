"""The rational-indexed enumeration of primitive words.

Positive scheme: base words ``E(0/1) = a^-1`` and ``E(1/0) = b``.  For a
rational with parents ``m/n < p/q < r/s`` the step is

* ``pq`` odd:  ``E(p/q) = E(r/s) E(m/n)``  (larger-indexed factor left),
* ``pq`` even: ``E(p/q) = E(m/n) E(r/s)``  (larger-indexed factor right).

The negative scheme is the mirror image: base words ``E(0/1) = a`` and
``E(1/0) = b``, with the factor order of each case reversed (reflection
reverses the order of the parents).  Products concatenate without free
cancellation, so ``len(E(p/q)) == |p| + q`` throughout.

When ``|p|q`` is even the word is the unique palindrome in its conjugacy
class; when odd it is the canonical product of its two parent palindromes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .rationals import INFINITY, ZERO, Parity, Rational, parents, parity
from .words import Word, is_palindrome, palindromic_rotation_count


class Scheme(str, Enum):
    POSITIVE = "pos"
    NEGATIVE = "neg"


class Case(str, Enum):
    BASE = "base"
    EVEN_PRODUCT = "even-product"
    ODD_PRODUCT = "odd-product"


class CertificateError(RuntimeError):
    """A palindrome certificate clause failed; indicates an implementation bug."""


@dataclass(frozen=True)
class Factorization:
    """How a scheme word decomposes; ``left``/``right`` are in concatenation
    order (``E(target) = E(left) E(right)`` without cancellation)."""

    target: Rational
    case: Case
    left: Rational | None = None
    right: Rational | None = None


@dataclass(frozen=True)
class PalindromeCertificate:
    fraction: Rational
    parity: Parity
    word: Word
    palindromic_rotations: int
    factors: tuple[Rational, Rational] | None = None
    factor_words: tuple[Word, Word] | None = None


_BASE_WORDS = {
    Scheme.POSITIVE: {ZERO: Word((-1,)), INFINITY: Word((2,))},
    Scheme.NEGATIVE: {ZERO: Word((1,)), INFINITY: Word((2,))},
}

_cache: dict[tuple[int, int, Scheme], Word] = {}


def scheme_for(x: Rational, scheme: Scheme | str | None = None) -> Scheme:
    """Resolve the active scheme: the sign of x, or an explicit choice for
    the two base rationals shared by both schemes (default positive)."""
    if scheme is None:
        return Scheme.NEGATIVE if x.p < 0 else Scheme.POSITIVE
    sch = Scheme(scheme)
    if x.p < 0 and sch is Scheme.POSITIVE:
        raise ValueError(f"{x} does not belong to the positive scheme")
    if x.p > 0 and not x.is_infinity and x != ZERO and sch is Scheme.NEGATIVE:
        raise ValueError(f"{x} does not belong to the negative scheme")
    return sch


def _ordered_factors(x: Rational, sch: Scheme) -> tuple[Rational, Rational]:
    smaller, larger = parents(x)
    odd = parity(x) is Parity.ODD
    if sch is Scheme.POSITIVE:
        return (larger, smaller) if odd else (smaller, larger)
    return (smaller, larger) if odd else (larger, smaller)


def factorization(x: Rational, scheme: Scheme | str | None = None) -> Factorization:
    sch = scheme_for(x, scheme)
    if x == ZERO or x.is_infinity:
        return Factorization(x, Case.BASE)
    left, right = _ordered_factors(x, sch)
    case = Case.ODD_PRODUCT if parity(x) is Parity.ODD else Case.EVEN_PRODUCT
    return Factorization(x, case, left, right)


def enumerate_word(x: Rational, scheme: Scheme | str | None = None) -> Word:
    """The scheme word for x.  Deterministic and memoized; recursion on
    parents is unrolled so deep levels cannot overflow the stack."""
    sch = scheme_for(x, scheme)
    key = (x.p, x.q, sch)
    if key in _cache:
        return _cache[key]
    stack = [x]
    while stack:
        top = stack[-1]
        k = (top.p, top.q, sch)
        if k in _cache:
            stack.pop()
            continue
        base = _BASE_WORDS[sch].get(top)
        if base is not None:
            _cache[k] = base
            stack.pop()
            continue
        left, right = _ordered_factors(top, sch)
        kl = (left.p, left.q, sch)
        kr = (right.p, right.q, sch)
        wl = _cache.get(kl)
        wr = _cache.get(kr)
        if wl is not None and wr is not None:
            _cache[k] = wl * wr
            stack.pop()
        else:
            if wl is None:
                stack.append(left)
            if wr is None:
                stack.append(right)
    return _cache[key]


def palindrome_certificate(
    x: Rational, scheme: Scheme | str | None = None
) -> PalindromeCertificate:
    """Check the palindrome / palindromic-product dichotomy for one rational.

    Even parity: the word is a palindrome and exactly one rotation is.
    Odd parity: both factors are palindromes and no rotation is.  A failed
    clause raises :class:`CertificateError` naming the clause.
    """
    sch = scheme_for(x, scheme)
    w = enumerate_word(x, sch)
    par = parity(x)
    rotations = palindromic_rotation_count(w)
    if par is Parity.EVEN:
        if not is_palindrome(w):
            raise CertificateError(f"{x}: even parity but the word is not a palindrome")
        if rotations != 1:
            raise CertificateError(
                f"{x}: expected exactly one palindromic rotation, found {rotations}"
            )
        return PalindromeCertificate(x, par, w, rotations)
    fact = factorization(x, sch)
    if fact.case is not Case.ODD_PRODUCT:
        raise CertificateError(f"{x}: odd parity but factorization case is {fact.case.value}")
    assert fact.left is not None and fact.right is not None
    lw = enumerate_word(fact.left, sch)
    rw = enumerate_word(fact.right, sch)
    if not is_palindrome(lw):
        raise CertificateError(f"{x}: left factor E({fact.left}) is not a palindrome")
    if not is_palindrome(rw):
        raise CertificateError(f"{x}: right factor E({fact.right}) is not a palindrome")
    if rotations != 0:
        raise CertificateError(
            f"{x}: odd parity but {rotations} palindromic rotation(s) exist"
        )
    return PalindromeCertificate(x, par, w, rotations, (fact.left, fact.right), (lw, rw))
