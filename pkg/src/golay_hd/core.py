"""Construction of the binary Golay code G23 and its extension G24.

Words are stored as unsigned integers, bit ``i`` holding symbol ``i``.
Positions 0..11 carry the information symbols, 12..22 the cyclic parity
of G23 and position 23 the overall parity of G24.

The code is generated by ``g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1``.
For information bit ``j`` the systematic codeword polynomial is
``x^(11+j) + (x^(11+j) mod g)``; degree ``11 + j`` is stored at position
``j`` and parity degree ``k`` at position ``12 + k``.  This is a fixed
coordinate permutation of the cyclic code, so all weight and distance
properties are those of the cyclic code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np

Variant = Literal["G23", "G24"]

GENERATOR_POLY = 0b110001110101  # x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
INFO_BITS = 12
INFO_MASK = (1 << INFO_BITS) - 1
VALID_LENGTHS = (12, 23, 24)


class ContractError(ValueError):
    """An argument violates the documented contract of an operation."""


@dataclass(frozen=True)
class BitWord:
    """A binary word of length 12, 23 or 24 packed into an int."""

    bits: int
    length: int

    def __post_init__(self):
        if self.length not in VALID_LENGTHS:
            raise ContractError(f"length must be one of {VALID_LENGTHS}, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ContractError(f"bits {self.bits:#x} do not fit in {self.length} positions")

    @classmethod
    def from_bits(cls, seq, length: int | None = None) -> BitWord:
        """Build a word from a sequence of 0/1 symbols, symbol ``i`` first."""
        seq = [int(b) for b in seq]
        value = 0
        for i, b in enumerate(seq):
            if b not in (0, 1):
                raise ContractError(f"symbol {i} is {b}, expected 0 or 1")
            value |= b << i
        return cls(value, len(seq) if length is None else length)

    def to_array(self) -> np.ndarray:
        return ((self.bits >> np.arange(self.length)) & 1).astype(np.uint8)

    def __xor__(self, other: BitWord) -> BitWord:
        _same_length(self, other)
        return BitWord(self.bits ^ other.bits, self.length)

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (i % self.length)) & 1

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join(str(self[i]) for i in range(self.length))


def _same_length(a: BitWord, b: BitWord) -> None:
    if a.length != b.length:
        raise ContractError(f"length mismatch: {a.length} vs {b.length}")


def _require_length(w: BitWord, length: int) -> None:
    if not isinstance(w, BitWord):
        raise ContractError(f"expected a BitWord, got {type(w).__name__}")
    if w.length != length:
        raise ContractError(f"expected a length-{length} word, got length {w.length}")


def weight(w: BitWord) -> int:
    """Hamming weight."""
    return w.bits.bit_count()


def distance(a: BitWord, b: BitWord) -> int:
    """Hamming distance between two words of equal length."""
    _same_length(a, b)
    return (a.bits ^ b.bits).bit_count()


def popcount(a) -> np.ndarray:
    """Elementwise Hamming weight of an integer array."""
    return np.bitwise_count(np.asarray(a))


@dataclass(frozen=True, eq=False)
class Codebook:
    """All 4096 codewords of one Golay variant.

    ``codewords[m]`` is the encoding of information word ``m``, so the
    array doubles as the encoder lookup table.
    """

    variant: Variant
    codewords: np.ndarray = field(repr=False)
    generator_rows: tuple[BitWord, ...]
    rate: Fraction

    @property
    def n(self) -> int:
        return 23 if self.variant == "G23" else 24

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        for c in self.codewords:
            yield BitWord(int(c), self.n)

    def __contains__(self, w: BitWord) -> bool:
        return w.length == self.n and w.bits in self.codeword_set

    @property
    def codeword_set(self) -> frozenset[int]:
        # cached on first use; the dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(int(c) for c in self.codewords)
            object.__setattr__(self, "_set", s)
            return s

    def weight_distribution(self) -> dict[int, int]:
        w, counts = np.unique(popcount(self.codewords), return_counts=True)
        return {int(a): int(b) for a, b in zip(w, counts)}

    def min_weight(self) -> int:
        return int(popcount(self.codewords[1:]).min())

    def check(self) -> None:
        """Raise AssertionError if a structural invariant is violated."""
        cw = self.codewords
        expected_min = 7 if self.variant == "G23" else 8
        # closure: encoding is linear in the information word
        closed = all(
            np.array_equal(cw ^ row.bits, cw[np.arange(4096) ^ (row.bits & INFO_MASK)])
            for row in self.generator_rows
        )
        for ok, msg in (
            (len(cw) == 4096 and len(np.unique(cw)) == 4096, "codewords not distinct"),
            (int(cw.max()) >> self.n == 0, "codeword wider than block length"),
            (bool(np.all((cw & INFO_MASK) == np.arange(4096))), "encoding not systematic"),
            (closed, "codebook not closed under XOR"),
            (self.min_weight() == expected_min, f"minimum weight is not {expected_min}"),
        ):
            if not ok:
                raise AssertionError(msg)


def _poly_mod(a: int, g: int) -> int:
    dg = g.bit_length() - 1
    while a and a.bit_length() - 1 >= dg:
        a ^= g << (a.bit_length() - 1 - dg)
    return a


def _span(rows: list[int]) -> np.ndarray:
    cw = np.zeros(4096, dtype=np.uint32)
    for j, r in enumerate(rows):
        half = 1 << j
        cw[half : 2 * half] = cw[:half] ^ r
    return cw


@lru_cache(maxsize=None)
def build_g23() -> Codebook:
    """The (23,12,7) Golay code in systematic form."""
    rows = []
    for j in range(INFO_BITS):
        parity = _poly_mod(1 << (11 + j), GENERATOR_POLY)
        rows.append((1 << j) | (parity << INFO_BITS))
    cb = Codebook(
        "G23",
        _span(rows),
        tuple(BitWord(r, 23) for r in rows),
        Fraction(12, 23),
    )
    cb.codewords.setflags(write=False)
    cb.check()
    return cb


def _parity_bit(x):
    return popcount(x) & 1


def extend_parity(c: BitWord) -> BitWord:
    """Append an overall parity symbol at position 23."""
    _require_length(c, 23)
    return BitWord(c.bits | (c.bits.bit_count() & 1) << 23, 24)


def extend_parity_array(c) -> np.ndarray:
    c = np.asarray(c, dtype=np.uint32)
    return c | (_parity_bit(c).astype(np.uint32) << 23)


@lru_cache(maxsize=None)
def build_g24() -> Codebook:
    """The (24,12,8) extended Golay code: G23 with overall parity appended."""
    g23 = build_g23()
    cb = Codebook(
        "G24",
        extend_parity_array(g23.codewords),
        tuple(extend_parity(r) for r in g23.generator_rows),
        Fraction(12, 24),
    )
    cb.codewords.setflags(write=False)
    cb.check()
    return cb


def build(variant: Variant) -> Codebook:
    if variant == "G23":
        return build_g23()
    if variant == "G24":
        return build_g24()
    raise ContractError(f"unknown variant {variant!r}")


def encode(info: BitWord, codebook: Codebook) -> BitWord:
    """Systematic encoding: positions 0..11 of the result equal ``info``."""
    _require_length(info, 12)
    return BitWord(int(codebook.codewords[info.bits]), codebook.n)


def all_ones(length: int) -> BitWord:
    return BitWord((1 << length) - 1, length)
