"""Machine verification suites: every structural law of the library run
exhaustively up to a level bound.

Each suite returns a :class:`SuiteResult` with a check count and the list
of failures (expected empty).  ``run_suites`` drives them all and produces
the JSON report used by the CLI ``verify`` command.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .enumeration import (
    Case,
    CertificateError,
    Parity,
    Scheme,
    enumerate_word,
    factorization,
    palindrome_certificate,
    scheme_for,
)
from .fsequence import (
    START_PAIR,
    apply_sequence,
    classify_form,
    conjugacy_bridge,
    cyclic_exponent_gaps_ok,
    fword,
    interior_exponent_gaps_ok,
    quadrant_of,
    reverse_negate,
)
from .primitivity import (
    Verdict,
    abelianization,
    neighbor_pair_values,
    nielsen_reduce,
    stallings_basis_check,
    verify_neighbor_pairs,
    worker_count,
)
from .rationals import (
    INFINITY,
    ZERO,
    Rational,
    approximants,
    farey_level,
    from_cf,
    is_neighbor,
    mediant,
    parents,
    parity,
    rationals_by_level,
    to_cf,
)
from .words import (
    Word,
    cyclic_equal,
    is_palindrome,
    palindromic_rotation_count,
    parse_word,
    substitute,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "checks": self.checks,
            "failures": list(self.failures),
        }
        if self.details:
            out["details"] = self.details
        return out


def _corpus(max_level: int, signs: tuple[str, ...] = ("pos", "neg")) -> list[Rational]:
    xs: list[Rational] = []
    for sign in signs:
        xs.extend(rationals_by_level(max_level, sign))
    return xs


def suite_word_core(max_level: int) -> SuiteResult:
    r = SuiteResult("word-core")
    words = [enumerate_word(x) for x in _corpus(min(max_level, 5))]
    small = words[: min(len(words), 14)]
    for u, v, w in product(small, repeat=3):
        r.check((u * v) * w == u * (v * w), f"associativity failed on {u},{v},{w}")
    for u, v in product(small, repeat=2):
        r.check(~(u * v) == ~v * ~u, f"inverse law failed on {u},{v}")
    for w in words:
        r.check(Word(w.letters) == w, f"reduction not idempotent on {w}")
        r.check(~~w == w, f"inversion not involutive on {w}")
        rev = w.reverse()
        r.check(Word(rev.letters) == rev, f"reverse of reduced not reduced on {w}")
        r.check(rev.reverse() == w, f"reverse not involutive on {w}")
    palindromes = [w for w in words if is_palindrome(w)]
    for w in palindromes:
        r.check(w.is_cyclically_reduced(), f"palindrome not cyclically reduced: {w}")
    for x, y in product(palindromes[:12], repeat=2):
        if len(x * y) != len(x) + len(y):
            continue
        for t in (1, 2, 3):
            r.check(
                is_palindrome((x * y) ** t * x),
                f"palindrome closure failed: ({x})({y}) t={t}",
            )
    conjugators = small[:6] + [parse_word("a"), parse_word("B a b")]
    for w in words[:40]:
        for i in range(0, max(len(w), 1), max(len(w) // 3, 1)):
            r.check(
                cyclic_equal(w, w.rotation(i)) or not w.is_cyclically_reduced(),
                f"rotation not cyclic-equal: {w} by {i}",
            )
        for g in conjugators:
            r.check(cyclic_equal(w, g * w * ~g), f"conjugate not cyclic-equal: {w} by {g}")
    return r


def suite_rational_farey(max_level: int) -> SuiteResult:
    r = SuiteResult("rational-farey")
    for sign in ("pos", "neg"):
        per_level: dict[int, int] = {}
        for x in rationals_by_level(max_level, sign):
            lvl = farey_level(x)
            per_level[lvl] = per_level.get(lvl, 0) + 1
            c = to_cf(x)
            r.check(from_cf(c) == x, f"cf round trip failed: {x}")
            r.check(
                len(c) == 1 or abs(c[-1]) >= 2,
                f"cf not canonical: {x} -> {c}",
            )
            r.check(farey_level(x) == farey_level(-x), f"level not mirror-symmetric: {x}")
            r.check(
                farey_level(x) == sum(abs(e) for e in c),
                f"level formula failed: {x}",
            )
            lo, hi = parents(x)
            r.check(is_neighbor(lo, hi), f"parents not neighbors: {x}")
            r.check(
                is_neighbor(lo, x) and is_neighbor(hi, x),
                f"parents not neighbors of child: {x}",
            )
            if lvl >= 2:
                # level-1 rationals are excluded: mediant(0/1, 1/0) must pick
                # one of the two tree roots and follows the positive scheme
                r.check(mediant(lo, hi) == x, f"mediant of parents differs: {x}")
            r.check(
                farey_level(lo) < lvl and farey_level(hi) < lvl,
                f"parent level not smaller: {x}",
            )
            odd_vertices = sum(
                1 for v in (x, lo, hi) if parity(v) is Parity.ODD
            )
            r.check(odd_vertices == 1, f"triangle parity law failed: {x}")
            approx = approximants(c)
            r.check(approx[-1] == x, f"last approximant differs: {x}")
            sides = [
                (v.p * x.q - x.p * v.q > 0) for v in approx[:-1]
            ]
            r.check(
                all(s1 != s2 for s1, s2 in zip(sides, sides[1:])),
                f"approximants do not alternate: {x}",
            )
        for lvl in range(1, max_level + 1):
            r.check(
                per_level.get(lvl, 0) == 2 ** (lvl - 1),
                f"{sign}: level {lvl} count {per_level.get(lvl, 0)} != {2 ** (lvl - 1)}",
            )
    return r


def _grandparent_identity(x: Rational) -> bool | None:
    """The proof identities writing an even word as (XY)^t X from grandparent
    words; None when there is no grandparent decomposition (level 1)."""
    c = to_cf(x)
    if len(c) == 1 and abs(c[0]) < 2:
        return None
    sch = scheme_for(x)
    step = 1 if c[-1] > 0 else -1
    lower = from_cf(c[:-1])
    higher = from_cf(c[:-1] + (c[-1] - step,))
    word = enumerate_word(x, sch)
    if parity(higher) is Parity.ODD:
        other = next(p for p in parents(higher) if p != lower)
        xw = enumerate_word(lower, sch)
        yw = enumerate_word(other, sch)
        return word == xw * yw * xw
    trunc = from_cf(c[:-2])
    other = next(p for p in parents(lower) if p != trunc)
    xw = enumerate_word(trunc, sch)
    yw = enumerate_word(other, sch)
    return word == (xw * yw) ** abs(c[-1]) * xw


def suite_enumeration(max_level: int) -> SuiteResult:
    r = SuiteResult("enumeration")
    a_inv = parse_word("A")
    b_gen = parse_word("b")
    for x in _corpus(max_level):
        sch = scheme_for(x)
        w = enumerate_word(x)
        par = parity(x)
        r.check(
            is_palindrome(w) == (par is Parity.EVEN),
            f"parity law failed: {x}",
        )
        r.check(w.is_cyclically_reduced(), f"not cyclically reduced: {x}")
        r.check(len(w) == abs(x.p) + x.q, f"length law failed: {x}")
        sums = w.exponent_sums()
        expected = (-x.q, x.p) if x.p > 0 else (x.q, -x.p)
        r.check(sums == expected, f"exponent sums failed: {x} -> {sums}")
        fact = factorization(x)
        lw = enumerate_word(fact.left, sch)
        rw = enumerate_word(fact.right, sch)
        r.check(w == lw * rw, f"factorization product failed: {x}")
        r.check(
            len(w) == len(lw) + len(rw),
            f"cancellation in factorization: {x}",
        )
        rotations = palindromic_rotation_count(w)
        if par is Parity.EVEN:
            r.check(rotations == 1, f"even word with {rotations} palindromic rotations: {x}")
        else:
            r.check(rotations == 0, f"odd word with {rotations} palindromic rotations: {x}")
            r.check(
                is_palindrome(lw) and is_palindrome(rw),
                f"odd factors not both palindromes: {x}",
            )
        try:
            palindrome_certificate(x)
        except CertificateError as exc:
            r.check(False, f"certificate failed: {exc}")
        if par is Parity.EVEN:
            gp = _grandparent_identity(x)
            if gp is not None:
                r.check(gp, f"grandparent identity failed: {x}")
        if x.p > 0:
            r.check(
                substitute(w, a_inv, b_gen) == enumerate_word(-x),
                f"reflection law failed: {x}",
            )
    return r


def _fsequences(max_sum: int):
    """All sequences [a0,...,ak] with a0 >= 0, interior entries positive,
    entry sum <= max_sum."""

    def rec(remaining: int, prefix: tuple[int, ...]):
        yield prefix
        lo = 1
        for nxt in range(lo, remaining + 1):
            yield from rec(remaining - nxt, prefix + (nxt,))

    for a0 in range(0, max_sum + 1):
        yield from rec(max_sum - a0, (a0,))


def suite_fsequence(max_level: int) -> SuiteResult:
    r = SuiteResult("fsequence")
    for seq in _fsequences(min(max_level, 12)):
        pairs = apply_sequence(START_PAIR, seq)
        back = apply_sequence(pairs[-1], reverse_negate(seq))
        r.check(back[-1] == START_PAIR, f"round trip failed: {list(seq)}")
        chain = [START_PAIR] + pairs
        for t in range(1, len(seq)):
            a_next, b_next = chain[t + 1]
            r.check(a_next == ~chain[t][1], f"A-recurrence failed: {list(seq)} step {t}")
            r.check(
                b_next == chain[t - 1][1] * chain[t][1] ** seq[t],
                f"B-recurrence failed: {list(seq)} step {t}",
            )
    for x in _corpus(max_level):
        r.check(conjugacy_bridge(x), f"conjugacy bridge failed: {x}")
        w = enumerate_word(x)
        try:
            rep = classify_form(w)
        except ValueError as exc:
            r.check(False, f"classification failed: {x}: {exc}")
            continue
        r.check(rep.quadrant == quadrant_of(x), f"quadrant mismatch: {x}")
        r.check(
            interior_exponent_gaps_ok(rep.exponents),
            f"interior exponent gaps exceed 1: {x}",
        )
        wraps = (
            abs(w.letters[0]) == rep.block_generator
            and abs(w.letters[-1]) == rep.block_generator
        )
        r.check(
            cyclic_exponent_gaps_ok(rep.exponents, wraps),
            f"cyclic exponent gaps exceed 1: {x}",
        )
        fw = fword(to_cf(x))
        frep = classify_form(fw)
        r.check(frep.quadrant == quadrant_of(x), f"sequence-word quadrant mismatch: {x}")
        fsums = fw.exponent_sums()
        esums = w.exponent_sums()
        r.check(
            fsums == esums or fsums == (-esums[0], -esums[1]),
            f"sequence-word abelianization mismatch: {x}",
        )
    return r


def random_reduced_word(rng: random.Random, max_len: int) -> Word:
    n = rng.randint(1, max_len)
    letters: list[int] = []
    while len(letters) < n:
        x = rng.choice((1, -1, 2, -2))
        if letters and letters[-1] == -x:
            continue
        letters.append(x)
    return Word(letters)


def oracle_agreement_controls(
    count: int, seed: int = 20250809, max_level: int = 10
) -> SuiteResult:
    """Both oracles must agree on randomized control pairs: scheme words of
    non-neighbor rationals, plus raw random reduced words.  Controls need
    not be bases; agreement (and the determinant soundness screen) is the
    assertion."""
    r = SuiteResult("oracle-controls")
    rng = random.Random(seed)
    pos = neighbor_pair_values(max_level, "pos")
    neg = neighbor_pair_values(max_level, "neg")
    made = 0
    while made < count:
        values, sch = (pos, Scheme.POSITIVE) if rng.random() < 0.5 else (neg, Scheme.NEGATIVE)
        x, y = rng.sample(values, 2)
        if is_neighbor(x, y):
            continue
        made += 1
        pair = (enumerate_word(x, sch), enumerate_word(y, sch))
        fold = stallings_basis_check(pair)
        niel = nielsen_reduce(pair)
        r.check(
            fold.verdict == niel.verdict,
            f"oracle disagreement on ({x},{y}): {fold.verdict.value} vs {niel.verdict.value}",
        )
        if fold.verdict is Verdict.BASIS:
            r.check(
                abs(abelianization(pair).det) == 1,
                f"basis verdict with non-unimodular abelianization: ({x},{y})",
            )
    for _ in range(count // 4):
        pair = (random_reduced_word(rng, 10), random_reduced_word(rng, 10))
        fold = stallings_basis_check(pair)
        niel = nielsen_reduce(pair)
        r.check(
            fold.verdict == niel.verdict,
            f"oracle disagreement on random pair {pair[0].compact()},{pair[1].compact()}",
        )
        if fold.verdict is Verdict.BASIS:
            r.check(
                abs(abelianization(pair).det) == 1,
                f"basis verdict with non-unimodular abelianization: "
                f"{pair[0].compact()},{pair[1].compact()}",
            )
    return r


def suite_primitivity(max_level: int, controls: int = 200) -> SuiteResult:
    r = SuiteResult("primitivity")
    for sign in ("pos", "neg"):
        report = verify_neighbor_pairs(max_level, sign)
        r.checks += report.pairs_checked
        r.failures.extend(report.failures)
        r.details[f"neighbor_pairs_{sign}"] = report.to_json()
    agreement = oracle_agreement_controls(controls, max_level=min(max_level, 10))
    r.checks += agreement.checks
    r.failures.extend(agreement.failures)
    conj = (parse_word("a b A"), parse_word("b"))
    plain = (parse_word("b A"), parse_word("b"))
    r.check(
        stallings_basis_check(conj).verdict is Verdict.PROPER_SUBGROUP,
        "conjugated pair unexpectedly a basis",
    )
    r.check(
        stallings_basis_check(plain).verdict is Verdict.BASIS,
        "unconjugated pair unexpectedly proper",
    )
    return r


SUITES = {
    "word-core": suite_word_core,
    "rational-farey": suite_rational_farey,
    "enumeration": suite_enumeration,
    "fsequence": suite_fsequence,
    "primitivity": suite_primitivity,
}


def mixed_sign_pair_survey(max_level: int) -> dict:
    """Informational sweep of mixed-sign neighbor pairs (each word taken
    from its own scheme; bases from the positive one).  Not part of the
    verified invariants: the two schemes assign different words to 0/1."""
    pos = [ZERO, INFINITY] + list(rationals_by_level(max_level, "pos"))
    neg = list(rationals_by_level(max_level, "neg"))
    checked = 0
    bases = 0
    for x in pos:
        wx = enumerate_word(x, Scheme.POSITIVE)
        for y in neg:
            if not is_neighbor(x, y):
                continue
            checked += 1
            pair = (wx, enumerate_word(y, Scheme.NEGATIVE))
            if stallings_basis_check(pair).verdict is Verdict.BASIS:
                bases += 1
    return {"pairs_checked": checked, "basis_count": bases}


def run_suites(
    max_level: int,
    names: list[str] | None = None,
    threads: int | None = None,
    include_mixed_sign: bool = False,
) -> dict:
    """Run the requested suites and return the canonical JSON-ready report."""
    chosen = sorted(SUITES) if names is None else sorted(names)
    threads = worker_count() if threads is None else max(1, threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda n: SUITES[n](max_level), chosen))
    else:
        results = [SUITES[name](max_level) for name in chosen]
    report = {
        "max_level": max_level,
        "suites": [res.to_json() for res in results],
        "total_checks": sum(res.checks for res in results),
        "total_failures": sum(len(res.failures) for res in results),
    }
    report["passed"] = report["total_failures"] == 0
    if include_mixed_sign:
        report["mixed_sign_survey"] = mixed_sign_pair_survey(max_level)
    return report
