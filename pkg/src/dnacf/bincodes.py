"""Classical binary codes feeding the DNA encoder.

Codes are either explicit word lists or generator matrices over GF(2);
codewords render as 0/1 strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

# The sixteen words of the [7,4,3] Hamming code, kept as the published
# listing so encoded tables reproduce row for row.
HAMMING_7_4_WORDS = (
    "0000000", "1110000", "1001100", "0111100",
    "0101010", "1011010", "1100110", "0010110",
    "1101001", "0011001", "0100101", "1010101",
    "1000011", "0110011", "0001111", "1111111",
)

# Systematic [23,12,7] Golay generator, reduced from the cyclic code of the
# quadratic-residue polynomial x^11+x^9+x^7+x^6+x^5+x+1 and committed here
# verbatim; weight enumeration over all 4096 words is pinned in tests.
GOLAY_23_12_ROWS = (
    "10000000000010101110001",
    "01000000000011111001001",
    "00100000000011010010101",
    "00010000000011000111011",
    "00001000000011001101100",
    "00000100000001100110110",
    "00000010000000110011011",
    "00000001000010110111100",
    "00000000100001011011110",
    "00000000010000101101111",
    "00000000001010111000110",
    "00000000000101011100011",
)

ENUMERATION_LIMIT = 1 << 24


class CodeTooLargeError(RuntimeError):
    """Raised when full enumeration of a code would exceed the given limit."""


@dataclass(frozen=True)
class BinaryCode:
    """A binary code, explicit or generator-defined."""

    name: str
    n: int
    words: Optional[tuple[str, ...]] = None
    generator: Optional[np.ndarray] = None
    declared_distance: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.words is None) == (self.generator is None):
            raise ValueError("need exactly one of words or generator")
        if self.words is not None:
            if any(len(w) != self.n for w in self.words):
                raise ValueError("mixed word lengths")
            if len(set(self.words)) != len(self.words):
                raise ValueError("duplicate words")
        else:
            if self.generator.shape[1] != self.n:
                raise ValueError("generator width does not match n")
            if gf2_rank(self.generator) != self.generator.shape[0]:
                raise ValueError("generator rows are linearly dependent")

    @property
    def size(self) -> int:
        if self.words is not None:
            return len(self.words)
        return 1 << self.generator.shape[0]

    @property
    def dimension(self) -> Optional[int]:
        return None if self.generator is None else self.generator.shape[0]


def gf2_rank(mat: np.ndarray) -> int:
    m = (np.asarray(mat, dtype=np.uint8) % 2).copy()
    rank = 0
    for c in range(m.shape[1]):
        piv = None
        for r in range(rank, m.shape[0]):
            if m[r, c]:
                piv = r
                break
        if piv is None:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        for r in range(m.shape[0]):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
        if rank == m.shape[0]:
            break
    return rank


def gf2_contains(generator: np.ndarray, word: np.ndarray) -> bool:
    """Membership of ``word`` in the row space of ``generator``."""
    g = (np.asarray(generator, dtype=np.uint8) % 2).copy()
    w = (np.asarray(word, dtype=np.uint8) % 2).copy()
    rank = 0
    for c in range(g.shape[1]):
        piv = None
        for r in range(rank, g.shape[0]):
            if g[r, c]:
                piv = r
                break
        if piv is None:
            continue
        g[[rank, piv]] = g[[piv, rank]]
        for r in range(g.shape[0]):
            if r != rank and g[r, c]:
                g[r] ^= g[rank]
        rank += 1
    # reduce the word against the echelon basis
    row = 0
    for c in range(g.shape[1]):
        if row < rank and g[row, c]:
            if w[c]:
                w ^= g[row]
            row += 1
    return not w.any()


def enumerate_codewords(code: BinaryCode, limit: int = ENUMERATION_LIMIT) -> list[str]:
    """All codewords as 0/1 strings, lexicographically sorted."""
    if code.size > limit:
        raise CodeTooLargeError(f"{code.name}: {code.size} codewords exceeds limit {limit}")
    if code.words is not None:
        return sorted(code.words)
    k = code.generator.shape[0]
    msgs = ((np.arange(1 << k)[:, None] >> np.arange(k - 1, -1, -1)[None, :]) & 1).astype(np.uint8)
    words = msgs @ code.generator % 2
    return sorted("".join(map(str, row)) for row in words)


def measured_min_distance(code: BinaryCode, limit: int = ENUMERATION_LIMIT) -> int:
    """Minimum Hamming distance by full enumeration.

    Linear codes reduce to minimum nonzero weight; explicit codes scan pairs.
    """
    if code.generator is not None:
        if code.size > limit:
            raise CodeTooLargeError(f"{code.name}: {code.size} codewords exceeds limit {limit}")
        k = code.generator.shape[0]
        msgs = ((np.arange(1, 1 << k)[:, None] >> np.arange(k - 1, -1, -1)[None, :]) & 1).astype(np.uint8)
        words = msgs @ code.generator % 2
        return int(words.sum(axis=1).min())
    words = enumerate_codewords(code, limit)
    mat = np.array([[int(c) for c in w] for w in words], dtype=np.uint8)
    best = code.n
    for i in range(len(words)):
        d = (mat[i + 1:] != mat[i]).sum(axis=1)
        if d.size:
            best = min(best, int(d.min()))
    return best


def contains_unit_vector_e1(code: BinaryCode) -> bool:
    """Whether (1 0 ... 0) is a codeword; if so, encoded DNA codes satisfy
    the complement constraint through closure."""
    e1 = "1" + "0" * (code.n - 1)
    if code.words is not None:
        return e1 in code.words
    return gf2_contains(code.generator, np.array([int(c) for c in e1], dtype=np.uint8))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def repetition_code(n: int) -> BinaryCode:
    if n < 1:
        raise ValueError("n must be positive")
    return BinaryCode(name=f"repetition{n}", n=n, words=("0" * n, "1" * n), declared_distance=n)


def hamming_7_4() -> BinaryCode:
    return BinaryCode(name="hamming74", n=7, words=HAMMING_7_4_WORDS, declared_distance=3)


def reed_muller(r: int, m: int) -> np.ndarray:
    """Generator matrix of the order-r length-2^m Reed-Muller code, built by
    the block recursion [[G(r,m-1), G(r,m-1)], [0, G(r-1,m-1)]]."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    if r == 0:
        return np.ones((1, 1 << m), dtype=np.uint8)
    if r == m:
        top = reed_muller(m - 1, m)
        last = np.ones((1, 1 << m), dtype=np.uint8)
        last[0, -1] = 0
        return np.vstack([top, last])
    left = reed_muller(r, m - 1)
    low = reed_muller(r - 1, m - 1)
    top = np.hstack([left, left])
    bottom = np.hstack([np.zeros((low.shape[0], 1 << (m - 1)), dtype=np.uint8), low])
    return np.vstack([top, bottom])


def reed_muller_code(r: int, m: int) -> BinaryCode:
    gen = reed_muller(r, m)
    dim = sum(comb(m, i) for i in range(r + 1))
    assert gen.shape == (dim, 1 << m)
    return BinaryCode(name=f"rm({r},{m})", n=1 << m, generator=gen, declared_distance=1 << (m - r))


def golay_23_12() -> BinaryCode:
    gen = np.array([[int(c) for c in row] for row in GOLAY_23_12_ROWS], dtype=np.uint8)
    return BinaryCode(name="golay23", n=23, generator=gen, declared_distance=7)
