"""Alphabet, DNA string involutions, and the packed 2-bit representation.

Strings are plain ``str`` over ``ACGT`` in the public API.  For exhaustive
enumeration and distance scans, strings are packed two bits per base into a
single integer (leftmost base in the most significant pair), so that ascending
packed values enumerate strings in lexicographic order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

ALPHABET = "ACGT"

# A=0, C=1, G=2, T=3.  Complement A<->T, C<->G is XOR with 0b11 per base.
_CODE_OF = {b: i for i, b in enumerate(ALPHABET)}
_COMPLEMENT_TABLE = str.maketrans("ACGTacgt", "TGCATGCA")

#: low bit of every 2-bit group in a 64-bit word
LOW_BITS = 0x5555555555555555


class AlphabetError(ValueError):
    """Raised when a string contains a character outside ACGT."""


def clean(s: str) -> str:
    """Normalize to uppercase ACGT, rejecting anything else (incl. IUPAC codes)."""
    t = s.strip().upper()
    if not t:
        raise AlphabetError("empty DNA string")
    for ch in t:
        if ch not in _CODE_OF:
            raise AlphabetError(f"invalid base {ch!r} in {s!r}")
    return t


def complement(s: str) -> str:
    """Watson-Crick complement, position by position."""
    return s.translate(_COMPLEMENT_TABLE)


def reverse(s: str) -> str:
    """The string read right to left."""
    return s[::-1]


def reverse_complement(s: str) -> str:
    """reverse(complement(s)); the strand this string hybridizes with."""
    return complement(s)[::-1]


def hamming_distance(s: str, t: str) -> int:
    """Number of positions at which two equal-length strings differ."""
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} vs {len(t)}")
    return sum(a != b for a, b in zip(s, t))


def gc_content(s: str) -> int:
    """Number of G and C symbols; invariant under reverse and complement."""
    return sum(ch in "GC" for ch in s)


# ---------------------------------------------------------------------------
# packed representation (2 bits per base, leftmost base most significant)
# ---------------------------------------------------------------------------

def pack(s: str) -> int:
    """Pack a string of length <= 31 into one integer."""
    v = 0
    for ch in s:
        v = (v << 2) | _CODE_OF[ch]
    return v


def unpack(v: int, n: int) -> str:
    """Inverse of :func:`pack` for a known length."""
    out = []
    for i in range(n):
        out.append(ALPHABET[(v >> (2 * (n - 1 - i))) & 3])
    return "".join(out)


def pack_all(words: Iterable[str]) -> np.ndarray:
    return np.array([pack(w) for w in words], dtype=np.int64)


def unpack_all(values: Iterable[int], n: int) -> list[str]:
    return [unpack(int(v), n) for v in values]


def complement_packed(v: int, n: int) -> int:
    return v ^ ((1 << (2 * n)) - 1)


def reverse_packed(v: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 2) | (v & 3)
        v >>= 2
    return out


def gc_content_packed(v: int, n: int) -> int:
    # C=01 and G=10 are exactly the codes whose two bits differ.
    x = (v ^ (v >> 1)) & LOW_BITS & ((1 << (2 * n)) - 1)
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# code-array representation for strings too long to pack (one byte per base)
# ---------------------------------------------------------------------------

def to_codes(s: str) -> np.ndarray:
    return np.array([_CODE_OF[ch] for ch in s], dtype=np.uint8)


def codes_matrix(words: Sequence[str]) -> np.ndarray:
    """Stack equal-length strings into an (M, n) uint8 matrix of base codes."""
    if not words:
        return np.empty((0, 0), dtype=np.uint8)
    n = len(words[0])
    mat = np.empty((len(words), n), dtype=np.uint8)
    for i, w in enumerate(words):
        if len(w) != n:
            raise ValueError(f"mixed lengths: {len(w)} vs {n}")
        for j, ch in enumerate(w):
            mat[i, j] = _CODE_OF[ch]
    return mat


def matrix_to_strings(mat: np.ndarray) -> list[str]:
    lookup = np.frombuffer(ALPHABET.encode("ascii"), dtype=np.uint8)
    return [bytes(lookup[row]).decode("ascii") for row in mat]
