"""Palindromic enumeration of primitive elements of the rank-two free
group, indexed by rationals.

Core pieces: exact free-group word arithmetic (:mod:`.words`), rational and
Farey/Stern-Brocot combinatorics (:mod:`.rationals`), the rational-indexed
word scheme with palindrome certificates (:mod:`.enumeration`),
winding/unwinding sequence rewriting (:mod:`.fsequence`), basis oracles
(:mod:`.primitivity`), the machine-verification suites (:mod:`.verify`) and
an SVG tessellation renderer (:mod:`.svg`).
"""

from .enumeration import (
    Case,
    CertificateError,
    Factorization,
    PalindromeCertificate,
    Scheme,
    enumerate_word,
    factorization,
    palindrome_certificate,
    scheme_for,
)
from .fsequence import (
    FormReport,
    NoFormError,
    Quadrant,
    START_PAIR,
    apply_sequence,
    classify_form,
    conjugacy_bridge,
    fword,
    quadrant_of,
    reverse_negate,
    unwind_step,
    wind_step,
)
from .primitivity import (
    AbelianMatrix,
    BasisCertificate,
    PairReport,
    Verdict,
    abelianization,
    nielsen_reduce,
    stallings_basis_check,
    verify_neighbor_pairs,
)
from .rationals import (
    INFINITY,
    ONE,
    ZERO,
    FractionFormatError,
    NonCoprimeError,
    Parity,
    Rational,
    UndefinedRationalError,
    approximants,
    farey_level,
    format_cf,
    format_left_right,
    from_cf,
    is_neighbor,
    left_right_sequence,
    make_rational,
    mediant,
    parents,
    parity,
    parse_cf,
    parse_fraction,
    rationals_by_level,
    to_cf,
)
from .svg import farey_svg, write_farey_svg
from .verify import run_suites
from .words import (
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

__all__ = [
    "AbelianMatrix",
    "BasisCertificate",
    "Case",
    "CertificateError",
    "Factorization",
    "FormReport",
    "FractionFormatError",
    "IDENTITY",
    "INFINITY",
    "NoFormError",
    "NonCoprimeError",
    "ONE",
    "PairReport",
    "PalindromeCertificate",
    "Parity",
    "Quadrant",
    "Rational",
    "START_PAIR",
    "Scheme",
    "UndefinedRationalError",
    "Verdict",
    "Word",
    "ZERO",
    "abelianization",
    "apply_sequence",
    "approximants",
    "classify_form",
    "concat",
    "conjugacy_bridge",
    "cyclic_equal",
    "cyclic_reduce",
    "enumerate_word",
    "exponent_sums",
    "factorization",
    "farey_level",
    "farey_svg",
    "format_cf",
    "format_left_right",
    "from_cf",
    "fword",
    "invert",
    "is_neighbor",
    "is_palindrome",
    "left_right_sequence",
    "make_rational",
    "mediant",
    "nielsen_reduce",
    "normalize",
    "palindrome_certificate",
    "palindromic_rotation_count",
    "parents",
    "parity",
    "parse_cf",
    "parse_fraction",
    "parse_word",
    "power",
    "quadrant_of",
    "rationals_by_level",
    "reverse",
    "reverse_negate",
    "run_suites",
    "scheme_for",
    "stallings_basis_check",
    "substitute",
    "to_cf",
    "unwind_step",
    "verify_neighbor_pairs",
    "wind_step",
    "write_farey_svg",
]
