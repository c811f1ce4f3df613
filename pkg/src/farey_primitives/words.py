"""Exact word arithmetic in the rank-two free group.

Letters are small integers: ``+1`` is ``a``, ``-1`` is ``a^-1``, ``+2`` is
``b`` and ``-2`` is ``b^-1``; negation is inversion.  A :class:`Word` always
stores the freely reduced letter tuple, so equal group elements compare
equal.  The empty word is the identity.

Textual format (shared by the CLI and the test fixtures): lowercase ``a b``
are generators, uppercase ``A B`` their inverses, with optional caret
exponents.  ``A^-2 b A^-3 b A^-2``, ``A^2 b A^3 b A^2`` and ``AAbAAAbAA``
all parse to the same word; the emitter produces the first form.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator

_NAMES = {1: "a", -1: "A", 2: "b", -2: "B"}
_CODES = {v: k for k, v in _NAMES.items()}

GEN_A = 1
GEN_B = 2


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            if x not in _NAMES:
                raise ValueError(f"invalid letter code: {x!r}")
            out.append(x)
    return tuple(out)


class Word:
    """A freely reduced word over {a, a^-1, b, b^-1}; an immutable value."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters: tuple[int, ...] = _reduce(letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, t: int) -> "Word":
        base = self.letters if t >= 0 else (~self).letters
        return Word(base * abs(t))

    def reverse(self) -> "Word":
        """Letter sequence reversed (no inversion); reduced stays reduced."""
        return Word(self.letters[::-1])

    def is_palindrome(self) -> bool:
        return self.letters == self.letters[::-1]

    def is_cyclically_reduced(self) -> bool:
        ls = self.letters
        return not ls or ls[0] != -ls[-1]

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """Split into ``(core, conjugator)`` with
        ``self == conjugator * core * ~conjugator`` and core cyclically
        reduced; the conjugator is the stripped prefix (shortest possible).
        """
        ls = self.letters
        i, j = 0, len(ls)
        while j - i >= 2 and ls[i] == -ls[j - 1]:
            i += 1
            j -= 1
        return Word(ls[i:j]), Word(ls[:i])

    def rotation(self, i: int) -> "Word":
        ls = self.letters
        i %= max(len(ls), 1)
        return Word(ls[i:] + ls[:i])

    def rotations(self) -> Iterator["Word"]:
        """All rotations by offset; conjugates when the word is cyclically reduced."""
        for i in range(max(len(self.letters), 1)):
            yield self.rotation(i)

    def runs(self) -> list[tuple[int, int]]:
        """Run-length view: ``[(generator, signed exponent), ...]``."""
        out: list[list[int]] = []
        for x in self.letters:
            g = abs(x)
            s = 1 if x > 0 else -1
            if out and out[-1][0] == g:
                out[-1][1] += s
            else:
                out.append([g, s])
        return [(g, e) for g, e in out]

    def exponent_sums(self) -> tuple[int, int]:
        sa = sum(1 if x == 1 else -1 if x == -1 else 0 for x in self.letters)
        sb = sum(1 if x == 2 else -1 if x == -2 else 0 for x in self.letters)
        return sa, sb

    def substitute(self, image_a: "Word", image_b: "Word") -> "Word":
        """Image under the endomorphism a -> image_a, b -> image_b."""
        table = {
            1: image_a.letters,
            -1: (~image_a).letters,
            2: image_b.letters,
            -2: (~image_b).letters,
        }
        seq: list[int] = []
        for x in self.letters:
            seq.extend(table[x])
        return Word(seq)

    def compact(self) -> str:
        """One character per letter, e.g. ``AAbAAAbAA``; identity is ``1``."""
        return "".join(_NAMES[x] for x in self.letters) or "1"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.runs():
            name = _NAMES[g if e > 0 else -g]
            parts.append(name if abs(e) == 1 else f"{name}^{e}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Word({self.compact()!r})"


IDENTITY = Word()


def normalize(letters: Iterable[int] | Word) -> Word:
    """Freely reduce a raw letter sequence; idempotent."""
    if isinstance(letters, Word):
        return letters
    return Word(letters)


def concat(*words: Word) -> Word:
    seq: list[int] = []
    for w in words:
        seq.extend(w.letters)
    return Word(seq)


def invert(w: Word) -> Word:
    return ~w


def reverse(w: Word) -> Word:
    return w.reverse()


def is_palindrome(w: Word) -> bool:
    return w.is_palindrome()


def power(w: Word, t: int) -> Word:
    return w**t


def substitute(w: Word, image_a: Word, image_b: Word) -> Word:
    return w.substitute(image_a, image_b)


def exponent_sums(w: Word) -> tuple[int, int]:
    return w.exponent_sums()


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    return w.cyclic_reduce()


def _letters_str(ls: tuple[int, ...]) -> str:
    return "".join(_NAMES[x] for x in ls)


def cyclic_equal(u: Word, v: Word) -> bool:
    """True iff u and v are conjugate (their cyclic cores are rotations)."""
    cu = u.cyclic_reduce()[0].letters
    cv = v.cyclic_reduce()[0].letters
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    s = _letters_str(cu)
    return _letters_str(cv) in s + s


def palindromic_rotation_count(w: Word) -> int:
    """Number of rotation offsets of a cyclically reduced word whose rotation
    is a palindrome.

    A rotation by ``i`` is a palindrome exactly when the reversed letter
    sequence equals the rotation by ``2i mod n``, so it suffices to locate
    the reversed sequence among rotations and count square roots of the
    offset mod n.
    """
    ls = w.letters
    n = len(ls)
    if n == 0:
        return 1
    if ls[0] == -ls[-1]:
        raise ValueError("word must be cyclically reduced")
    s = _letters_str(ls)
    doubled = s + s
    reversed_s = s[::-1]
    count = 0
    t = doubled.find(reversed_s)
    while 0 <= t < n:
        if n % 2 == 1:
            count += 1
        elif t % 2 == 0:
            count += 2
        t = doubled.find(reversed_s, t + 1)
    return count


_TOKEN_RE = re.compile(r"([aAbB])(?:\^(-?\d+))?|[.·*1]|\s+")


def parse_word(text: str) -> Word:
    """Parse the textual word format.

    Bare letters: lowercase is the generator, uppercase its inverse.  With a
    caret exponent the letter names the generator and the uppercase form
    carries a negative exponent, so ``A^-2`` and ``A^2`` both mean
    ``a^-2``.  Dots, ``*`` and whitespace separate factors; ``1`` is the
    identity.
    """
    seq: list[int] = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if m.start() != pos:
            break
        pos = m.end()
        letter, exp = m.group(1), m.group(2)
        if letter is None:
            continue
        code = _CODES[letter]
        if exp is None:
            seq.append(code)
        else:
            n = int(exp) if code > 0 else -abs(int(exp))
            g = abs(code)
            seq.extend([g if n > 0 else -g] * abs(n))
    if pos != len(text) or not text.strip():
        raise ValueError(f"cannot parse word: {text!r}")
    return Word(seq)
