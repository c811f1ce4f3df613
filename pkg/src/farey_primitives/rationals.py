"""Exact rationals with a point at infinity, continued fractions in the
entrywise-signed convention, and Farey / Stern-Brocot combinatorics.

The continued fraction of a negative rational negates every entry of the
expansion of its absolute value (``-31/9 = [-3;-2,-4]``), which preserves
the tessellation's mirror symmetry: levels, parents and neighbor relations
of ``x`` and ``-x`` correspond under reflection.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from math import gcd


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class FractionFormatError(ValueError):
    """Fraction or continued-fraction text that cannot be parsed."""


class UndefinedRationalError(ValueError):
    """Raised for 0/0."""


class NonCoprimeError(ValueError):
    """Raised in strict mode when an input fraction is not in lowest terms."""


@total_ordering
@dataclass(frozen=True)
class Rational:
    """A rational ``p/q`` in lowest terms with ``q >= 0``.

    ``q == 0`` only for the single point at infinity ``1/0``.  Ordering is
    by value with ``1/0`` comparing as plus infinity; contexts that need it
    to act as minus infinity (parents of negative rationals) handle that
    explicitly.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0 or (self.q == 0 and self.p != 1) or gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"not a canonical rational: {self.p}/{self.q}")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __neg__(self) -> "Rational":
        return Rational(-self.p, self.q) if self.q else self

    def __lt__(self, other: "Rational") -> bool:
        return self.p * other.q < other.p * self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def as_fraction(self) -> Fraction:
        if not self.q:
            raise ValueError("1/0 has no finite value")
        return Fraction(self.p, self.q)


ZERO = Rational(0, 1)
ONE = Rational(1, 1)
INFINITY = Rational(1, 0)


def make_rational(p: int, q: int, strict: bool = False) -> Rational:
    """Canonical lowest-terms rational; any ``(+-m, 0)`` maps to ``1/0``."""
    if p == 0 and q == 0:
        raise UndefinedRationalError("0/0 is undefined")
    if q == 0:
        if strict and abs(p) != 1:
            raise NonCoprimeError(f"{p}/{q} is not in lowest terms")
        return INFINITY
    g = gcd(abs(p), abs(q))
    if strict and g != 1:
        raise NonCoprimeError(f"{p}/{q} is not in lowest terms")
    if q < 0:
        p, q = -p, -q
    return Rational(p // g, q // g)


def _validate_cf(entries: Sequence[int]) -> None:
    for e in entries:
        if not isinstance(e, int):
            raise ValueError(f"continued-fraction entries must be integers: {e!r}")
    if any(e == 0 for e in entries[1:]):
        raise ValueError("only the leading continued-fraction entry may be zero")
    signs = {e > 0 for e in entries if e != 0}
    if len(signs) > 1:
        raise ValueError("mixed-sign continued-fraction entries")


def to_cf(x: Rational) -> tuple[int, ...]:
    """Canonical continued fraction; negative rationals get every entry
    negated.  The last entry has magnitude >= 2 whenever there is more than
    one entry."""
    if x.is_infinity:
        raise ValueError("1/0 has no continued fraction")
    neg = x.p < 0
    p, q = abs(x.p), x.q
    entries = []
    while q:
        a, r = divmod(p, q)
        entries.append(a)
        p, q = q, r
    return tuple(-e for e in entries) if neg else tuple(entries)


def from_cf(entries: Sequence[int]) -> Rational:
    """Exact value of a continued fraction via the approximant recursion.

    Accepts non-canonical trailing-one forms; the empty sequence is the
    internal representation of ``1/0``.
    """
    entries = tuple(entries)
    _validate_cf(entries)
    if not entries:
        return INFINITY
    p_prev, q_prev = 1, 0
    p, q = entries[0], 1
    for a in entries[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return make_rational(p, q)


def approximants(entries: Sequence[int]) -> tuple[Rational, ...]:
    """The approximants p_n/q_n for n = 0..k; the last equals the value."""
    entries = tuple(entries)
    _validate_cf(entries)
    if not entries:
        raise ValueError("empty continued fraction has no approximants")
    out = []
    p_prev, q_prev = 1, 0
    p, q = entries[0], 1
    out.append(make_rational(p, q))
    for a in entries[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(make_rational(p, q))
    return tuple(out)


def farey_level(x: Rational) -> int:
    """Sum of the continued-fraction entry magnitudes; 0 for 0/1 and 1/0."""
    if x == ZERO or x.is_infinity:
        return 0
    return sum(abs(e) for e in to_cf(x))


def is_neighbor(x: Rational, y: Rational) -> bool:
    return abs(x.p * y.q - x.q * y.p) == 1


def mediant(x: Rational, y: Rational) -> Rational:
    """Farey sum of two neighbors.  On the negative side the point at
    infinity contributes as (-1)/0, mirroring the positive convention, so
    that the mediant of the parents always returns the child."""
    if not is_neighbor(x, y):
        raise ValueError(f"{x} and {y} are not Farey neighbors")
    xp, yp = x.p, y.p
    if x.is_infinity and y.p < 0:
        xp = -1
    if y.is_infinity and x.p < 0:
        yp = -1
    return make_rational(xp + yp, x.q + y.q)


def parity(x: Rational) -> Parity:
    return Parity.EVEN if (abs(x.p) * x.q) % 2 == 0 else Parity.ODD


def parents(x: Rational) -> tuple[Rational, Rational]:
    """The two distinguished neighbors, ``(smaller, larger)``.

    They are the continued-fraction truncations ``[a0;...,a_{k-1}]`` and
    ``[a0;...,a_k -+ 1]``.  ``1/0`` counts as the larger parent of positive
    integers and the smaller parent of negative ones.
    """
    if x == ZERO or x.is_infinity:
        raise ValueError(f"{x} has no parents")
    entries = to_cf(x)
    first = from_cf(entries[:-1])
    step = 1 if entries[-1] > 0 else -1
    second = from_cf(entries[:-1] + (entries[-1] - step,))
    if first.is_infinity or second.is_infinity:
        other = second if first.is_infinity else first
        return (other, INFINITY) if x.p > 0 else (INFINITY, other)
    return (first, second) if first < second else (second, first)


def rationals_by_level(max_level: int, sign: str = "pos") -> Iterator[Rational]:
    """All rationals with ``1 <= level <= max_level`` of the requested sign,
    each exactly once, in level order and ascending value within a level.

    Generated breadth-first on the Stern-Brocot tree by repeated mediants;
    tree depth equals Farey level.
    """
    if sign not in ("pos", "neg", "both"):
        raise ValueError(f"sign must be pos, neg or both: {sign!r}")
    frontier: list[tuple[Rational, Rational]] = [(ZERO, INFINITY)]
    for _ in range(max_level):
        mediants = [Rational(lo.p + hi.p, lo.q + hi.q) for lo, hi in frontier]
        if sign in ("neg", "both"):
            for m in reversed(mediants):
                yield Rational(-m.p, m.q)
        if sign in ("pos", "both"):
            yield from mediants
        frontier = [
            pair
            for (lo, hi), m in zip(frontier, mediants)
            for pair in ((lo, m), (m, hi))
        ]


def left_right_sequence(x: Rational) -> tuple[int, ...]:
    """The signed left-right sequence of the geodesic to x; identical to the
    continued fraction in this convention."""
    if x == ZERO or x.is_infinity:
        raise ValueError(f"{x} has no left-right sequence")
    return to_cf(x)


def format_left_right(entries: Sequence[int]) -> str:
    sign = "-" if any(e < 0 for e in entries) else "+"
    mags = [str(abs(e)) for e in entries]
    head, rest = mags[0], mags[1:]
    return f"{sign}({head};{','.join(rest)})" if rest else f"{sign}({head})"


_FRACTION_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_fraction(text: str, strict: bool = False) -> Rational:
    m = _FRACTION_RE.match(text)
    if not m:
        raise FractionFormatError(f"cannot parse fraction: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(p, q, strict=strict)


def parse_cf(text: str) -> tuple[int, ...]:
    """Parse ``[3;2,4]``, ``[-3;-2,-4]`` or bare ``3,2,4``."""
    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        t = t[1:-1]
    parts = [s.strip() for s in t.replace(";", ",").split(",")]
    if not parts or any(not s for s in parts):
        raise FractionFormatError(f"cannot parse continued fraction: {text!r}")
    try:
        entries = tuple(int(s) for s in parts)
    except ValueError as exc:
        raise FractionFormatError(f"cannot parse continued fraction: {text!r}") from exc
    _validate_cf(entries)
    return entries


def format_cf(entries: Sequence[int]) -> str:
    entries = tuple(entries)
    if not entries:
        return "[]"
    head, rest = entries[0], entries[1:]
    return f"[{head};{','.join(map(str, rest))}]" if rest else f"[{head}]"
