"""Independent oracles certifying that a pair of words generates the whole
rank-two free group.

``stallings_basis_check`` folds the wedge of the two word loops to the core
graph of the subgroup they generate; the pair is a basis exactly when the
folded based graph is the two-petal rose.  ``nielsen_reduce`` greedily
applies length-decreasing elementary moves (falling back to a bounded
search through length-preserving moves when stuck on a plateau) and checks
whether the terminal pair is two distinct single letters.  The folding
oracle is definitive; the Nielsen oracle cross-checks it and produces a
move trace.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .enumeration import Scheme, enumerate_word
from .rationals import INFINITY, ZERO, Rational, farey_level, is_neighbor, rationals_by_level
from .words import Word

GenPair = tuple[Word, Word]


class Verdict(str, Enum):
    BASIS = "basis"
    PROPER_SUBGROUP = "proper-subgroup"


@dataclass(frozen=True)
class AbelianMatrix:
    """Exponent sums of a word pair: rows are words, columns (a, b)."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.rows
        return a * d - b * c


@dataclass(frozen=True)
class BasisCertificate:
    verdict: Verdict
    folding_vertex_count: int | None = None
    nielsen_trace: tuple[str, ...] | None = None


@dataclass
class PairReport:
    """Outcome of the neighbor-pair sweep; serializes to the JSON interface
    {pairs_checked, basis_count, failures}."""

    pairs_checked: int = 0
    basis_count: int = 0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "pairs_checked": self.pairs_checked,
            "basis_count": self.basis_count,
            "failures": list(self.failures),
        }


def abelianization(pair: GenPair) -> AbelianMatrix:
    u, v = pair
    return AbelianMatrix((u.exponent_sums(), v.exponent_sums()))


def stallings_basis_check(pair: GenPair) -> BasisCertificate:
    """Fold the based wedge of the two word loops; verdict ``BASIS`` iff the
    folded graph is a single vertex carrying both generator loops."""
    u, v = pair
    if not u.letters or not v.letters:
        raise ValueError("words must be nonempty")

    edges: list[tuple[int, int, int]] = []
    n = 1
    for w in (u, v):
        prev = 0
        last = len(w.letters) - 1
        for i, x in enumerate(w.letters):
            if i == last:
                nxt = 0
            else:
                nxt = n
                n += 1
            if x > 0:
                edges.append((prev, x, nxt))
            else:
                edges.append((nxt, -x, prev))
            prev = nxt

    parent = list(range(n))
    size = [1] * n
    out: list[dict[int, int]] = [dict() for _ in range(n)]
    inn: list[dict[int, int]] = [dict() for _ in range(n)]

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    pending: list[tuple[int, int]] = []

    def insert_out(s: int, g: int, d: int) -> None:
        cur = out[s].get(g)
        if cur is None:
            out[s][g] = d
            return
        cur = find(cur)
        out[s][g] = cur
        if cur != d:
            pending.append((cur, d))

    def insert_in(d: int, g: int, s: int) -> None:
        cur = inn[d].get(g)
        if cur is None:
            inn[d][g] = s
            return
        cur = find(cur)
        inn[d][g] = cur
        if cur != s:
            pending.append((cur, s))

    for s, g, d in edges:
        insert_out(find(s), g, find(d))
        insert_in(find(d), g, find(s))
        while pending:
            a, b = pending.pop()
            a, b = find(a), find(b)
            if a == b:
                continue
            if size[a] < size[b]:
                a, b = b, a
            parent[b] = a
            size[a] += size[b]
            moved_out, out[b] = out[b], {}
            moved_in, inn[b] = inn[b], {}
            for g2, d2 in moved_out.items():
                insert_out(a, g2, find(d2))
            for g2, s2 in moved_in.items():
                insert_in(a, g2, find(s2))

    roots = {find(i) for i in range(n)}
    base = find(0)
    loops = {g for g, d in out[base].items() if find(d) == base}
    is_rose = len(roots) == 1 and loops == {1, 2}
    return BasisCertificate(
        verdict=Verdict.BASIS if is_rose else Verdict.PROPER_SUBGROUP,
        folding_vertex_count=len(roots),
    )


_PRODUCT_MOVES: tuple[tuple[str, int, int], ...] = (
    # (label, target slot, kind) with kinds: 0 w*o, 1 w*o^-1, 2 o*w, 3 o^-1*w
    ("w0<-w0*w1", 0, 0),
    ("w0<-w0*w1^-1", 0, 1),
    ("w0<-w1*w0", 0, 2),
    ("w0<-w1^-1*w0", 0, 3),
    ("w1<-w1*w0", 1, 0),
    ("w1<-w1*w0^-1", 1, 1),
    ("w1<-w0*w1", 1, 2),
    ("w1<-w0^-1*w1", 1, 3),
)


def _apply_product(pair: GenPair, slot: int, kind: int) -> GenPair:
    w = pair[slot]
    o = pair[1 - slot]
    if kind == 0:
        w = w * o
    elif kind == 1:
        w = w * ~o
    elif kind == 2:
        w = o * w
    else:
        w = ~o * w
    return (w, pair[1]) if slot == 0 else (pair[0], w)


def _plateau_escape(
    pair: GenPair, budget: int = 4096
) -> tuple[list[str], GenPair] | None:
    """Search pairs reachable through length-preserving moves (products that
    keep the total length, swaps, inversions) for one that admits a strictly
    decreasing product move.  Returns the move path or None."""
    total = len(pair[0]) + len(pair[1])
    start = (pair[0].letters, pair[1].letters)
    seen = {start}
    queue: deque[tuple[GenPair, list[str]]] = deque([(pair, [])])
    while queue and len(seen) < budget:
        cur, path = queue.popleft()
        for label, slot, kind in _PRODUCT_MOVES:
            cand = _apply_product(cur, slot, kind)
            cand_total = len(cand[0]) + len(cand[1])
            if cand_total < total:
                return path + [label], cand
            if cand_total == total:
                key = (cand[0].letters, cand[1].letters)
                if key not in seen:
                    seen.add(key)
                    queue.append((cand, path + [label]))
        for label, cand in (
            ("invert w0", (~cur[0], cur[1])),
            ("invert w1", (cur[0], ~cur[1])),
            ("swap", (cur[1], cur[0])),
        ):
            key = (cand[0].letters, cand[1].letters)
            if key not in seen:
                seen.add(key)
                queue.append((cand, path + [label]))
    return None


def nielsen_reduce(pair: GenPair) -> BasisCertificate:
    """Greedy length reduction by elementary Nielsen moves with a fixed,
    deterministic move order; verdict ``BASIS`` iff the terminal pair is two
    single letters on distinct generators (up to inversion)."""
    u, v = pair
    if not u.letters or not v.letters:
        raise ValueError("words must be nonempty")
    cur: GenPair = (u, v)
    trace: list[str] = []
    while True:
        total = len(cur[0]) + len(cur[1])
        for label, slot, kind in _PRODUCT_MOVES:
            cand = _apply_product(cur, slot, kind)
            if len(cand[0]) + len(cand[1]) < total:
                cur = cand
                trace.append(label)
                break
        else:
            escape = _plateau_escape(cur)
            if escape is None:
                break
            path, cur = escape
            trace.extend(path)
    a, b = cur
    basis = (
        len(a) == 1
        and len(b) == 1
        and abs(a.letters[0]) != abs(b.letters[0])
    )
    return BasisCertificate(
        verdict=Verdict.BASIS if basis else Verdict.PROPER_SUBGROUP,
        nielsen_trace=tuple(trace),
    )


def worker_count() -> int:
    """Worker cap from FAREY_PRIM_THREADS (default 1: sequential)."""
    raw = os.environ.get("FAREY_PRIM_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _check_neighbor_pair(args: tuple[Rational, Rational, Scheme]) -> tuple[str, bool, str | None]:
    x, y, sch = args
    key = f"{x},{y}"
    pair = (enumerate_word(x, sch), enumerate_word(y, sch))
    fold = stallings_basis_check(pair)
    niel = nielsen_reduce(pair)
    det = abelianization(pair).det
    problems = []
    if fold.verdict is not Verdict.BASIS:
        problems.append(f"stallings={fold.verdict.value}")
    if niel.verdict is not Verdict.BASIS:
        problems.append(f"nielsen={niel.verdict.value}")
    if abs(det) != 1:
        problems.append(f"det={det}")
    if problems:
        return key, False, f"{key}: " + " ".join(problems)
    return key, True, None


def verify_neighbor_pairs(
    max_level: int, sign: str = "pos", threads: int | None = None
) -> PairReport:
    """Run both oracles and the determinant screen over every unordered
    same-sign neighbor pair (including the scheme bases 0/1 and 1/0) with
    both levels <= max_level.  Expected outcome: every pair is a basis."""
    if sign not in ("pos", "neg"):
        raise ValueError(f"sign must be pos or neg: {sign!r}")
    sch = Scheme.POSITIVE if sign == "pos" else Scheme.NEGATIVE
    values = [ZERO, INFINITY]
    values.extend(rationals_by_level(max_level, sign))
    jobs = [
        (x, y, sch) for x, y in combinations(values, 2) if is_neighbor(x, y)
    ]
    threads = worker_count() if threads is None else max(1, threads)
    report = PairReport()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_neighbor_pair, jobs))
    else:
        results = [_check_neighbor_pair(job) for job in jobs]
    for _key, ok, failure in results:
        report.pairs_checked += 1
        if ok:
            report.basis_count += 1
        else:
            report.failures.append(failure)
    return report


def neighbor_pair_values(max_level: int, sign: str) -> list[Rational]:
    """The rationals covered by :func:`verify_neighbor_pairs`, base points
    first, then by level; exposed for sampling control pairs."""
    values = [ZERO, INFINITY]
    values.extend(rationals_by_level(max_level, sign))
    return values
