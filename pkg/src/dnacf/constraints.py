"""String- and code-level constraint predicates, plus closed-form counters.

The predicates treat a string as 1-indexed where the definitions do; all
window scans check every offset, not just block-aligned ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

import numpy as np

from . import _kernels, core


def is_conflict_free(s: str, ell: int) -> bool:
    """True iff no two adjacent identical t-blocks occur for any t = 1..ell.

    ``ell`` must satisfy 1 <= ell <= floor(n/2).
    """
    n = len(s)
    if not 1 <= ell <= n // 2:
        raise ValueError(f"ell={ell} out of range for length {n} (1..{n // 2})")
    if n <= 31:
        return _kernels.conflict_free_packed(core.pack(s), n, ell)
    return _conflict_scan(s, ell)


def _conflict_scan(s: str, ell: int) -> bool:
    n = len(s)
    for t in range(1, ell + 1):
        for p in range(n - 2 * t + 1):
            if s[p:p + t] == s[p + t:p + 2 * t]:
                return False
    return True


def is_complete_conflict_free(s: str) -> bool:
    """Conflict free at every block length up to floor(n/2); true for n = 1."""
    n = len(s)
    if n // 2 == 0:
        return True
    return is_conflict_free(s, n // 2)


def conflict_free_level(s: str) -> int:
    """Largest ell for which the string is ell conflict free (0 if none)."""
    for ell in range(len(s) // 2, 0, -1):
        if is_conflict_free(s, ell):
            return ell
    return 0


def is_rc_substring_free(s: str) -> bool:
    """True iff no length-3 substring has its reverse-complement elsewhere
    in the string (occurrences may overlap).

    Any reverse-complement substring pair of length k > 3 contains a length-3
    pair, so checking 3-mers covers all stem lengths above 2.
    """
    n = len(s)
    if n < 3:
        return True
    if n <= 31:
        return _kernels.rc_free_packed(core.pack(s), n)
    seen = {s[p:p + 3] for p in range(n - 2)}
    return not any(core.reverse_complement(w) in seen for w in seen)


@dataclass(frozen=True)
class DnaCode:
    """A set of distinct, equal-length DNA codewords."""

    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError("empty code")
        n = len(self.words[0])
        if any(len(w) != n for w in self.words):
            raise ValueError("mixed codeword lengths")
        if len(set(self.words)) != len(self.words):
            raise ValueError("duplicate codewords")

    @classmethod
    def from_iterable(cls, words: Iterable[str]) -> "DnaCode":
        return cls(tuple(core.clean(w) for w in words))

    @property
    def n(self) -> int:
        return len(self.words[0])

    @property
    def size(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class ConstraintReport:
    """Measured constraint profile of a code against a distance floor."""

    n: int
    size: int
    min_hamming: int
    distance_floor: int
    reverse_ok: bool
    reverse_complement_ok: bool
    complement_ok: bool
    gc_constant: Optional[int]
    conflict_free_level: int
    hairpin_free: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "min_hamming": self.min_hamming,
            "distance_floor": self.distance_floor,
            "reverse_ok": self.reverse_ok,
            "reverse_complement_ok": self.reverse_complement_ok,
            "complement_ok": self.complement_ok,
            "gc_constant": self.gc_constant,
            "conflict_free_level": self.conflict_free_level,
            "hairpin_free": self.hairpin_free,
        }


def verify_code(code: DnaCode | Iterable[str], claimed_d: int | None = None) -> ConstraintReport:
    """Measure every constraint of a code.

    ``min_hamming`` for a singleton code is n by convention.  The reverse,
    reverse-complement, and complement checks compare every ordered codeword
    pair (x, y) against the transformed y, skipping pairs where x equals the
    transform, and require distance >= ``claimed_d`` (measured min if absent).
    """
    if not isinstance(code, DnaCode):
        code = DnaCode.from_iterable(code)
    n = code.n
    mat = core.codes_matrix(code.words)
    if code.size >= 2:
        min_h = int(_kernels.min_pairwise_u8(mat))
    else:
        min_h = n
    floor = claimed_d if claimed_d is not None else min_h

    rev = np.ascontiguousarray(mat[:, ::-1])
    comp = np.ascontiguousarray(3 - mat)
    rc = np.ascontiguousarray(3 - rev)
    reverse_ok = _cross_ok(mat, rev, floor)
    rc_ok = _cross_ok(mat, rc, floor)
    comp_ok = _cross_ok(mat, comp, floor)

    gcs = {core.gc_content(w) for w in code.words}
    gc_constant = gcs.pop() if len(gcs) == 1 else None
    level = min(conflict_free_level(w) for w in code.words)
    hairpin = all(is_rc_substring_free(w) for w in code.words)
    return ConstraintReport(
        n=n,
        size=code.size,
        min_hamming=min_h,
        distance_floor=floor,
        reverse_ok=reverse_ok,
        reverse_complement_ok=rc_ok,
        complement_ok=comp_ok,
        gc_constant=gc_constant,
        conflict_free_level=level,
        hairpin_free=hairpin,
    )


def _cross_ok(mat: np.ndarray, transformed: np.ndarray, floor: int) -> bool:
    d = int(_kernels.min_cross_u8(mat, transformed))
    return d >= floor  # pairs at distance 0 (x equals the transform) skipped


SPECIAL_KINDS = ("self_reverse", "self_rc", "gc_exact", "gc_and_self_rc", "gc_and_self_reverse")


def count_special_strings(n: int, kind: str, m: int | None = None) -> int:
    """Closed-form counts of constrained strings of length n.

    ``kind`` selects which family:

    - ``self_reverse``: x equal to its reverse
    - ``self_rc``: x equal to its reverse-complement (0 for odd n)
    - ``gc_exact``: GC content exactly m
    - ``gc_and_self_rc``: GC content m and x equal to its reverse-complement
    - ``gc_and_self_reverse``: GC content m and x equal to its reverse
    """
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "self_reverse":
        return 4 ** ((n + 1) // 2)
    if kind == "self_rc":
        return 4 ** (n // 2) if n % 2 == 0 else 0
    if m is None or not 0 <= m <= n:
        raise ValueError(f"kind {kind!r} needs 0 <= m <= n, got {m}")
    if kind == "gc_exact":
        return comb(n, m) * 2 ** n
    if kind == "gc_and_self_rc":
        # complementary position pairs contribute GC 0 or 2, so m must be even
        if n % 2 == 1 or m % 2 == 1:
            return 0
        return comb(n // 2, m // 2) * 2 ** (n // 2)
    if kind == "gc_and_self_reverse":
        if n % 2 == 0 and m % 2 == 1:
            return 0
        return comb(n // 2, m // 2) * 2 ** ((n + 1) // 2)
    raise ValueError(f"unknown kind {kind!r}; expected one of {SPECIAL_KINDS}")
