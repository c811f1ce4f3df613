"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage errors, 3 invalid
values (0/0, non-coprime in --strict mode, infinite endpoints, oversized
levels), 4 I/O failures.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from .enumeration import (
    CertificateError,
    Scheme,
    enumerate_word,
    factorization,
    palindrome_certificate,
    scheme_for,
)
from .fsequence import START_PAIR, apply_sequence, classify_form, conjugacy_bridge, fword, reverse_negate
from .rationals import (
    FractionFormatError,
    NonCoprimeError,
    Rational,
    UndefinedRationalError,
    farey_level,
    format_cf,
    format_left_right,
    parents,
    parity,
    parse_cf,
    parse_fraction,
    rationals_by_level,
    to_cf,
)
from .svg import write_farey_svg
from .verify import run_suites
from .words import Word, is_palindrome

MAX_CLI_LEVEL = 64

COLUMNS = (
    "fraction",
    "cf",
    "level",
    "length",
    "parity",
    "case",
    "parents",
    "parental_product",
    "word",
    "simplified",
    "palindrome",
)


def _level_option(required: bool = True):
    def validate(ctx, param, value):
        if value is None:
            return value
        if value < 1:
            raise click.UsageError("--max-level must be >= 1")
        return value

    return click.option("--max-level", type=int, required=required, callback=validate)


def _parse_fraction_arg(text: str, strict: bool = False) -> Rational:
    try:
        return parse_fraction(text, strict=strict)
    except (UndefinedRationalError, NonCoprimeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except FractionFormatError as exc:
        raise click.UsageError(str(exc))


def _guard_level(x: Rational) -> None:
    if not x.is_infinity and farey_level(x) > MAX_CLI_LEVEL:
        click.echo(
            f"error: {x} has Farey level {farey_level(x)} > {MAX_CLI_LEVEL}; "
            "word sizes grow too fast beyond desk scale",
            err=True,
        )
        sys.exit(3)


def _row(x: Rational) -> dict:
    sch = scheme_for(x)
    w = enumerate_word(x, sch)
    fact = factorization(x, sch)
    lo, hi = parents(x)
    left_word = enumerate_word(fact.left, sch)
    right_word = enumerate_word(fact.right, sch)
    return {
        "fraction": str(x),
        "cf": format_cf(to_cf(x)),
        "level": farey_level(x),
        "length": len(w),
        "parity": parity(x).value,
        "case": fact.case.value,
        "parents": f"{lo} (+) {hi}",
        "parental_product": f"{left_word} . {right_word}",
        "word": w.compact(),
        "simplified": str(w),
        "palindrome": "yes" if is_palindrome(w) else "no",
    }


@click.group()
def main() -> None:
    """Enumerate primitive words of the rank-two free group by rationals."""


@main.command("enumerate")
@_level_option()
@click.option("--sign", type=click.Choice(["pos", "neg", "both"]), default="pos", show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True
)
def cmd_enumerate(max_level: int, sign: str, fmt: str) -> None:
    """One row per rational with 1 <= level <= MAX-LEVEL, in level order."""
    if max_level > MAX_CLI_LEVEL:
        click.echo(f"error: --max-level capped at {MAX_CLI_LEVEL}", err=True)
        sys.exit(3)
    rows = [_row(x) for x in rationals_by_level(max_level, sign)]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    elif fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    else:
        widths = {
            c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c)
            for c in COLUMNS
        }
        click.echo("  ".join(c.ljust(widths[c]) for c in COLUMNS).rstrip())
        for r in rows:
            click.echo("  ".join(str(r[c]).ljust(widths[c]) for c in COLUMNS).rstrip())


@main.command("word")
@click.argument("fraction")
@click.option(
    "--scheme",
    type=click.Choice(["auto", "pos", "neg"]),
    default="auto",
    show_default=True,
    help="Base-word scheme for 0/1 and 1/0, which belong to both.",
)
@click.option("--strict", is_flag=True, help="Reject non-coprime input instead of normalizing.")
def cmd_word(fraction: str, scheme: str, strict: bool) -> None:
    """Full report for one rational: word, factorization, certificate."""
    x = _parse_fraction_arg(fraction, strict=strict)
    _guard_level(x)
    try:
        sch = scheme_for(x, None if scheme == "auto" else Scheme(scheme))
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    w = enumerate_word(x, sch)
    fact = factorization(x, sch)
    sums = w.exponent_sums()
    lines = [
        f"fraction: {x}",
        f"scheme: {sch.value}",
        f"level: {farey_level(x)}",
        f"parity: {parity(x).value}",
        f"word: {w}",
        f"compact: {w.compact()}",
        f"length: {len(w)}",
        f"exponent sums: a={sums[0]} b={sums[1]}",
        f"palindrome: {'yes' if is_palindrome(w) else 'no'}",
        f"case: {fact.case.value}",
    ]
    if not x.is_infinity and x.p != 0:
        lines.insert(2, f"cf: {format_cf(to_cf(x))}")
        lines.insert(3, f"left-right: {format_left_right(to_cf(x))}")
        lo, hi = parents(x)
        lines.append(f"parents: {lo} (+) {hi}")
    if fact.left is not None:
        lines.append(f"factors: {fact.left} . {fact.right}")
        lines.append(
            "parental product: "
            f"{enumerate_word(fact.left, sch)} . {enumerate_word(fact.right, sch)}"
        )
    try:
        cert = palindrome_certificate(x, sch)
    except CertificateError as exc:
        click.echo(f"certificate FAILED: {exc}", err=True)
        sys.exit(1)
    if cert.parity.value == "even":
        lines.append("certificate: even case, unique palindromic rotation verified")
    else:
        lines.append("certificate: odd case, palindromic factors and zero palindromic rotations verified")
    if not x.is_infinity and x.p != 0:
        lines.append(
            f"conjugate to sequence word: {'yes' if conjugacy_bridge(x) else 'NO'}"
        )
    click.echo("\n".join(lines))


def _parse_sequence_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_cf(text)
    except (FractionFormatError, ValueError) as exc:
        raise click.UsageError(str(exc))


def _pair_str(pair: tuple[Word, Word]) -> str:
    return f"({pair[0]}, {pair[1]})"


@main.command("fword")
@click.argument("sequence")
@click.option(
    "--start-from",
    "start_from",
    default=None,
    help="Start from the final pair reached by this sequence instead of (a, b).",
)
def cmd_fword(sequence: str, start_from: str | None) -> None:
    """Apply a winding/unwinding sequence, printing every intermediate pair."""
    seq = _parse_sequence_arg(sequence)
    start = START_PAIR
    if start_from is not None:
        base_seq = _parse_sequence_arg(start_from)
        try:
            start = apply_sequence(START_PAIR, base_seq)[-1]
        except ValueError as exc:
            raise click.UsageError(str(exc))
    try:
        pairs = apply_sequence(start, seq)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"sequence: {format_cf(seq)}")
    click.echo(f"start: {_pair_str(start)}")
    for i, pair in enumerate(pairs, start=1):
        click.echo(f"step {i}: {_pair_str(pair)}")
    click.echo(f"final pair: {_pair_str(pairs[-1])}")
    back = apply_sequence(pairs[-1], reverse_negate(seq))
    ok = back[-1] == start
    click.echo(
        f"round trip with {format_cf(reverse_negate(seq))}: "
        f"{'returns the start pair' if ok else 'FAILED'}"
    )
    if not ok:
        sys.exit(1)


@main.command("verify")
@_level_option()
@click.option(
    "--include-mixed-sign",
    is_flag=True,
    help="Also survey mixed-sign neighbor pairs (informational only).",
)
def cmd_verify(max_level: int, include_mixed_sign: bool) -> None:
    """Run every invariant suite up to the level bound; exit 0 iff all pass."""
    if max_level > MAX_CLI_LEVEL:
        click.echo(f"error: --max-level capped at {MAX_CLI_LEVEL}", err=True)
        sys.exit(3)
    report = run_suites(max_level, include_mixed_sign=include_mixed_sign)
    click.echo(json.dumps(report, indent=2))
    if not report["passed"]:
        sys.exit(1)


@main.command("farey-svg")
@click.argument("fraction")
@click.option("-o", "--out", "out_path", required=True, type=click.Path(dir_okay=False, writable=False))
@click.option("--depth", type=int, default=5, show_default=True)
@click.option("--strict", is_flag=True, help="Reject non-coprime input instead of normalizing.")
def cmd_farey_svg(fraction: str, out_path: str, depth: int, strict: bool) -> None:
    """Render the tessellation and the geodesic to FRACTION as an SVG."""
    x = _parse_fraction_arg(fraction, strict=strict)
    if x.is_infinity:
        click.echo("error: 1/0 is not a finite endpoint", err=True)
        sys.exit(3)
    if depth < 1:
        raise click.UsageError("--depth must be >= 1")
    if depth > 12:
        click.echo("error: --depth capped at 12", err=True)
        sys.exit(3)
    _guard_level(x)
    try:
        write_farey_svg(x, depth, out_path)
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(4)
    click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()
