"""Compose a binary code with a validated block pair into a DNA code, and
check every predicted property against measurement.

Predictions are computed from sound rules only, so a finished build's report
never over-claims: the encoded minimum distance comes from the binary
support-gap distance (an exact isometry), the complement check from the exact
max-distance rule or unit-vector closure, and the reverse/conflict/hairpin
checks from the corresponding pair flags.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from . import core
from .bincodes import BinaryCode, contains_unit_vector_e1, enumerate_codewords
from .constraints import ConstraintReport, DnaCode, verify_code
from .isomap import (
    BlockPair,
    TransitionMap,
    encode,
    encoded_gc_content,
    max_binary_distance,
    min_binary_distance,
    validate_pair,
)


class BuildRefusedError(RuntimeError):
    """The pair lacks a flag needed for a requested claim."""


class BuildFailedError(RuntimeError):
    """A predicted property failed measurement."""


#: claim name -> pair flag it needs
_CLAIM_FLAGS = {
    "reverse": "reverse_safe",
    "conflict": "conflict_safe",
    "hairpin": "hairpin_safe",
    "gc_balanced": "gc_balanced",
}


@dataclass(frozen=True)
class CheckRow:
    name: str
    predicted: object
    measured: object
    passed: bool


@dataclass
class DnaCodeBuildReport:
    source: str
    pair: tuple[str, str]
    h0: str
    n_bits: int
    ell: int
    checks: list[CheckRow] = field(default_factory=list)
    constraint_report: Optional[ConstraintReport] = None

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.checks)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "pair": list(self.pair),
            "h0": self.h0,
            "n_bits": self.n_bits,
            "ell": self.ell,
            "measured": self.constraint_report.to_dict() if self.constraint_report else None,
            "claims": [
                {
                    "name": row.name,
                    "predicted": row.predicted,
                    "measured": row.measured,
                    "pass": row.passed,
                }
                for row in self.checks
            ],
            "pass": self.passed,
        }


def printed_complement_condition(d_min: int, n_bits: int, ell: int) -> bool:
    """The published trigger for the complement constraint: minimum encoded
    distance at most half the codeword length.  Kept for auditability; it is
    not sufficient (see tests), so builds do not use it."""
    return d_min <= n_bits * ell / 2


def build_dna_code(
    code: BinaryCode,
    pair: BlockPair,
    h0: str = "x",
    require: Sequence[str] = (),
) -> tuple[DnaCode, DnaCodeBuildReport]:
    """Encode every codeword and verify the predicted constraint profile.

    ``require`` names claims ("reverse", "conflict", "hairpin",
    "gc_balanced") that must be supported by the pair; the build refuses,
    naming the missing flag, when one is not.
    """
    flags = validate_pair(pair)
    for claim in require:
        flag = _CLAIM_FLAGS.get(claim)
        if flag is None:
            raise ValueError(f"unknown claim {claim!r}")
        if not getattr(flags, flag):
            raise BuildRefusedError(f"pair ({pair.x},{pair.y}) lacks {flag} for claim {claim!r}")

    tmap = TransitionMap.standard(pair, h0)
    words = enumerate_codewords(code)
    n_bits, ell = code.n, pair.ell
    dna_words = tuple(encode(w, tmap) for w in words)
    dna = DnaCode(dna_words)

    d_pred = min_binary_distance(words, ell) if len(words) >= 2 else None
    report = DnaCodeBuildReport(
        source=code.name, pair=(pair.x, pair.y), h0=h0, n_bits=n_bits, ell=ell
    )
    measured = verify_code(dna, claimed_d=d_pred)
    report.constraint_report = measured

    def check(name, predicted, got, ok):
        report.checks.append(CheckRow(name=name, predicted=predicted, measured=got, passed=ok))

    check("length", n_bits * ell, dna.n, dna.n == n_bits * ell)
    check("size", len(words), dna.size, dna.size == len(words))
    if d_pred is not None:
        check("hamming_distance", d_pred, measured.min_hamming, measured.min_hamming == d_pred)
    gc_pred = encoded_gc_content(
        n_bits, core.gc_content(pair.x), core.gc_content(pair.y), tmap.start_class()
    )
    check("gc_content", gc_pred, measured.gc_constant, measured.gc_constant == gc_pred)
    if flags.conflict_safe:
        # short encodings cap the level at floor(len/2)
        level_pred = min(2 * ell - 1, (n_bits * ell) // 2)
        check(
            "conflict_level",
            level_pred,
            measured.conflict_free_level,
            measured.conflict_free_level >= level_pred,
        )
    if flags.hairpin_safe:
        check("hairpin_free", True, measured.hairpin_free, measured.hairpin_free)
    if flags.reverse_safe and n_bits % 2 == 0:
        check("reverse", True, measured.reverse_ok, measured.reverse_ok)
    complement_pred = _complement_predicted(code, words, n_bits, ell, d_pred)
    if complement_pred:
        check("complement", True, measured.complement_ok, measured.complement_ok)
        if flags.reverse_safe and n_bits % 2 == 0:
            check(
                "reverse_complement",
                True,
                measured.reverse_complement_ok,
                measured.reverse_complement_ok,
            )
    if not report.passed:
        failed = [row.name for row in report.checks if not row.passed]
        raise BuildFailedError(f"predicted properties failed measurement: {failed}")
    return dna, report


def _complement_predicted(code, words, n_bits, ell, d_pred) -> bool:
    # closure rule: flipping the leading bit complements the encoding, so a
    # linear code containing e1 yields a complement-closed DNA code
    if code.generator is not None and contains_unit_vector_e1(code):
        return True
    if d_pred is None:
        return False
    # exact rule: d(u, v^c) = n*ell - d(u, v), minimized at the largest
    # sub-complement pair distance
    d_max = max_binary_distance(words, ell)
    total = n_bits * ell
    if d_max == total:  # complement pairs themselves are skipped by the check
        rest = [d for d in _pair_distances_below(words, ell, total)]
        d_max = max(rest) if rest else 0
    return total - d_max >= d_pred


def _pair_distances_below(words, ell, total):
    from .isomap import binary_distance

    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            d = binary_distance(words[i], words[j], ell)
            if d < total:
                yield d


def reed_muller_dna(
    r: int, m: int, pair: BlockPair, h0: str = "x"
) -> tuple[DnaCode, DnaCodeBuildReport]:
    """Encode the order-r length-2^m binary code through a fully valid pair
    and assert the predicted parameters.

    Refused for r = m (the distance formula ell*2^(m-r-1) is fractional) and
    for m > 4 (enumeration scale).
    """
    if not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m (distance formula); got r={r}, m={m}")
    if m > 4:
        raise ValueError("m > 4 exceeds desk scale")
    flags = validate_pair(pair)
    if not flags.fully_valid:
        raise BuildRefusedError(f"pair ({pair.x},{pair.y}) is not fully valid")
    from .bincodes import reed_muller_code

    code = reed_muller_code(r, m)
    dna, report = build_dna_code(code, pair, h0=h0, require=("conflict", "gc_balanced"))
    ell = pair.ell
    expected_d = ell * (1 << (m - r - 1))
    expected_size = 1 << sum(comb(m, i) for i in range(r + 1))
    measured = report.constraint_report
    rows = [
        CheckRow("rm_distance", expected_d, measured.min_hamming, measured.min_hamming == expected_d),
        CheckRow("rm_size", expected_size, dna.size, dna.size == expected_size),
        CheckRow(
            "rm_gc", ell * (1 << (m - 1)), measured.gc_constant,
            measured.gc_constant == ell * (1 << (m - 1)),
        ),
    ]
    report.checks.extend(rows)
    if not all(row.passed for row in rows):
        failed = [row.name for row in rows if not row.passed]
        raise BuildFailedError(f"predicted properties failed measurement: {failed}")
    return dna, report
