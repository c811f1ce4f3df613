"""Winding / unwinding generator-pair rewriting and the words it produces.

An unwinding step labeled ``t`` replaces ``(M, N)`` by ``(N^-1, M^-1 N^t)``;
a winding step labeled ``-q`` replaces ``(U, V)`` by ``(U^-q V^-1, U^-1)``.
The two maps are mutually inverse, and running a sequence forward and its
reversed negation backward returns the starting pair.

The sequence word ``fword([a0,...,ak])`` is the final second component of
iterating the unwinding map from ``(a, b)``; for entrywise-negative
sequences the same iteration applies with negative exponents, which is the
construction matched (up to conjugacy and inverses) by the enumeration
scheme for negative rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .enumeration import enumerate_word
from .rationals import ZERO, Rational, to_cf
from .words import Word, cyclic_equal

GenPair = tuple[Word, Word]

START_PAIR: GenPair = (Word((1,)), Word((2,)))


class NoFormError(ValueError):
    """The word fits none of the four primitive-exponent templates."""


class Quadrant(str, Enum):
    GT1 = "x>1"
    ZERO_TO_ONE = "0<x<=1"
    LT_MINUS1 = "x<-1"
    MINUS_ONE_TO_ZERO = "-1<=x<0"


@dataclass(frozen=True)
class FormReport:
    """Primitive-exponent reading of a word: which generator carries the
    exponent blocks, the block sign, and the block magnitudes."""

    quadrant: Quadrant
    epsilon: int
    exponents: tuple[int, ...]
    block_generator: int
    unit_generator: int


def unwind_step(pair: GenPair, t: int) -> GenPair:
    """(M, N) -> (N^-1, M^-1 N^t), normalized."""
    m, n = pair
    return (~n, ~m * n**t)


def wind_step(pair: GenPair, q: int) -> GenPair:
    """(U, V) -> (U^-q V^-1, U^-1) for q >= 1, the inverse of the unwinding
    step labeled q."""
    if q < 1:
        raise ValueError("winding steps take a positive label")
    u, v = pair
    return (u**-q * ~v, ~u)


def _sequence_mode(seq: tuple[int, ...]) -> str:
    if not seq:
        raise ValueError("empty sequence")
    has_pos = any(e > 0 for e in seq)
    has_neg = any(e < 0 for e in seq)
    if has_pos and has_neg:
        raise ValueError("mixed-sign sequence")
    return "neg" if has_neg else "pos"


def apply_sequence(start: GenPair, seq) -> list[GenPair]:
    """Run a sequence of steps from ``start`` and return every intermediate
    pair, one per entry.

    All-nonnegative sequences (zero only leading) run unwinding steps;
    all-nonpositive sequences (zero only trailing, as produced by
    :func:`reverse_negate`) run winding steps.
    """
    seq = tuple(seq)
    mode = _sequence_mode(seq)
    pairs: list[GenPair] = []
    pair = start
    if mode == "pos":
        if any(e == 0 for e in seq[1:]):
            raise ValueError("zero entries only lead an unwinding sequence")
        for t in seq:
            pair = unwind_step(pair, t)
            pairs.append(pair)
    else:
        if any(e == 0 for e in seq[:-1]):
            raise ValueError("zero entries only end a winding sequence")
        for e in seq:
            pair = unwind_step(pair, 0) if e == 0 else wind_step(pair, -e)
            pairs.append(pair)
    return pairs


def fword(seq) -> Word:
    """The sequence word: final second component of the unwinding iteration
    from ``(a, b)``.  Valid for all-positive and all-negative sequences with
    a zero permitted only as the leading entry."""
    seq = tuple(seq)
    _sequence_mode(seq)
    if any(e == 0 for e in seq[1:]):
        raise ValueError("zero entries only lead a sequence")
    pair = START_PAIR
    for t in seq:
        pair = unwind_step(pair, t)
    return pair[1]


def reverse_negate(seq) -> tuple[int, ...]:
    """Reverse the entries and negate each; involutive."""
    return tuple(-e for e in reversed(tuple(seq)))


def classify_form(w: Word) -> FormReport:
    """Match a word against the four primitive-exponent templates.

    In any primitive word one generator (the unit generator) appears only
    with exponent +-1 of a single sign while the other carries exponent
    blocks of a single sign.  The quadrant is determined by which generator
    carries the blocks (the more frequent one; ties read as blocks on ``a``)
    and by whether the two signs agree.  Raises :class:`NoFormError` when no
    template fits; fitting is necessary but not sufficient for primitivity.
    """
    if not w.letters:
        raise ValueError("empty word")
    exps: dict[int, list[int]] = {1: [], 2: []}
    for g, e in w.runs():
        exps[g].append(e)
    for g, es in exps.items():
        if es and len({e > 0 for e in es}) > 1:
            raise NoFormError(f"generator {'ab'[g - 1]} has mixed-sign exponents")
    na = sum(abs(e) for e in exps[1])
    nb = sum(abs(e) for e in exps[2])
    block = 2 if nb > na else 1
    unit = 3 - block
    if any(abs(e) != 1 for e in exps[unit]):
        raise NoFormError("both generators carry exponents of magnitude >= 2")
    block_exps = exps[block]
    epsilon = 1 if block_exps[0] > 0 else -1
    same_sign = bool(exps[unit]) and (exps[unit][0] > 0) == (epsilon > 0)
    if block == 2:
        quadrant = Quadrant.LT_MINUS1 if same_sign else Quadrant.GT1
    else:
        quadrant = Quadrant.MINUS_ONE_TO_ZERO if same_sign else Quadrant.ZERO_TO_ONE
    return FormReport(
        quadrant=quadrant,
        epsilon=epsilon,
        exponents=tuple(abs(e) for e in block_exps),
        block_generator=block,
        unit_generator=unit,
    )


def quadrant_of(x: Rational) -> Quadrant:
    """Where a rational sits relative to {-1, 0, 1, infinity}."""
    if x == ZERO:
        raise ValueError("0/1 lies on a quadrant boundary")
    if x.is_infinity or x.p > x.q:
        if x.p > 0:
            return Quadrant.GT1
    if x.p > 0:
        return Quadrant.ZERO_TO_ONE
    return Quadrant.LT_MINUS1 if -x.p > x.q else Quadrant.MINUS_ONE_TO_ZERO


def interior_exponent_gaps_ok(exponents: tuple[int, ...]) -> bool:
    """Adjacent primitive exponents differ by at most one, leaving out the
    pairs that involve the first or last exponent (the boundary exponents
    play the role of the template's relaxed end exponents)."""
    interior = exponents[1:-1]
    return all(abs(a - b) <= 1 for a, b in zip(interior, interior[1:]))


def cyclic_exponent_gaps_ok(exponents: tuple[int, ...], wraps: bool) -> bool:
    """Adjacent-gap law on the cyclic word: when the word both starts and
    ends with a block of the block generator the two boundary blocks merge
    into one, and every cyclically adjacent pair must differ by at most 1."""
    if len(exponents) <= 1:
        return True
    cyc = list(exponents)
    if wraps:
        cyc = [cyc[-1] + cyc[0]] + cyc[1:-1]
    if len(cyc) <= 1:
        return True
    return all(
        abs(cyc[i] - cyc[(i + 1) % len(cyc)]) <= 1 for i in range(len(cyc))
    )


def conjugacy_bridge(x: Rational) -> bool:
    """True iff the scheme word for x and the sequence word of its continued
    fraction are conjugate, possibly after inverting one of them."""
    if x == ZERO or x.is_infinity:
        raise ValueError(f"{x} is outside the bridge domain")
    e = enumerate_word(x)
    f = fword(to_cf(x))
    return cyclic_equal(e, f) or cyclic_equal(e, ~f)
