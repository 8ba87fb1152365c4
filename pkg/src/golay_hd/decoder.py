"""Complete maximum-likelihood hard-decision decoders for G23 and G24.

Decoding is table driven.  A received word's syndrome selects its coset;
the minimum-weight elements of that coset (the coset leaders) are exactly
the error patterns that move the word onto a nearest codeword.  G23 is
perfect, so every coset has one leader of weight at most 3.  For G24 a
coset either has a single leader of weight at most 3 or six leaders of
weight 4, and the decoder must choose among the six tied codewords.

Every function has a scalar form operating on :class:`BitWord` and an
``*_array`` form operating on ``uint32`` arrays for bulk simulation.
Randomised tie-breaking draws from a caller-supplied
``numpy.random.Generator`` so that results are reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from golay_hd.core import (
    INFO_MASK,
    BitWord,
    ContractError,
    _require_length,
    build_g23,
    build_g24,
    extend_parity,
    extend_parity_array,
    popcount,
)

MASK23 = (1 << 23) - 1


class TieBreak(enum.Enum):
    """How decode24 picks among six equidistant codewords."""

    RANDOM = "random"
    AGREEMENT = "agreement"


@dataclass(frozen=True)
class DecodeOutcome:
    codeword: BitWord
    distance: int
    tie_set_size: int


def _patterns(n: int, max_weight: int) -> np.ndarray:
    out = [0]
    for w in range(1, max_weight + 1):
        out.extend(sum(1 << i for i in pos) for pos in combinations(range(n), w))
    return np.array(out, dtype=np.uint32)


@dataclass(frozen=True, eq=False)
class SyndromeTable23:
    """Unique coset leader for each of the 2048 syndromes of G23."""

    parity: np.ndarray  # parity part of the codeword for each info word
    leaders: np.ndarray

    def syndrome(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=np.uint32)
        return (y >> 12) ^ self.parity[y & INFO_MASK]


@dataclass(frozen=True, eq=False)
class CosetTable24:
    """All minimum-weight leaders for each of the 4096 cosets of G24.

    ``leaders[s, :tie_size[s]]`` are the leaders of syndrome ``s``, sorted by
    the number of ones they place on information positions (fewest first).
    ``best_agreement[s]`` counts the leaders achieving that minimum.
    """

    parity: np.ndarray
    leader_weight: np.ndarray
    tie_size: np.ndarray
    leaders: np.ndarray
    best_agreement: np.ndarray

    def syndrome(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=np.uint32)
        return (y >> 12) ^ self.parity[y & INFO_MASK]

    def leaders_of(self, s: int) -> list[int]:
        return [int(v) for v in self.leaders[s, : self.tie_size[s]]]


@lru_cache(maxsize=None)
def syndrome_table_23() -> SyndromeTable23:
    g23 = build_g23()
    parity = (g23.codewords >> 12).astype(np.uint32)
    pats = _patterns(23, 3)
    syn = (pats >> 12) ^ parity[pats & INFO_MASK]
    leaders = np.zeros(2048, dtype=np.uint32)
    if len(np.unique(syn)) != 2048 or len(pats) != 2048:
        raise RuntimeError("weight <= 3 patterns do not tile the syndromes of G23")
    leaders[syn] = pats
    for a in (parity, leaders):
        a.setflags(write=False)
    return SyndromeTable23(parity, leaders)


@lru_cache(maxsize=None)
def coset_table_24() -> CosetTable24:
    g24 = build_g24()
    parity = (g24.codewords >> 12).astype(np.uint32)
    pats = _patterns(24, 4)
    syn = (pats >> 12) ^ parity[pats & INFO_MASK]
    wts = popcount(pats)

    leader_weight = np.full(4096, 99, dtype=np.int64)
    np.minimum.at(leader_weight, syn, wts.astype(np.int64))
    if leader_weight.max() > 4:
        raise RuntimeError("coset with no leader of weight <= 4")

    is_leader = wts == leader_weight[syn]
    lead_pats, lead_syn = pats[is_leader], syn[is_leader]
    sys_wt = popcount(lead_pats & INFO_MASK)
    order = np.lexsort((lead_pats, sys_wt, lead_syn))
    lead_pats, lead_syn, sys_wt = lead_pats[order], lead_syn[order], sys_wt[order]

    tie_size = np.bincount(lead_syn, minlength=4096)
    if tie_size.max() > 6:
        raise RuntimeError("more than six leaders in a coset")
    starts = np.concatenate(([0], np.cumsum(tie_size)[:-1]))
    rank = np.arange(len(lead_pats)) - starts[lead_syn]
    leaders = np.zeros((4096, 6), dtype=np.uint32)
    leaders[lead_syn, rank] = lead_pats

    min_sys = np.full(4096, 99, dtype=np.int64)
    np.minimum.at(min_sys, lead_syn, sys_wt.astype(np.int64))
    best = np.bincount(lead_syn[sys_wt == min_sys[lead_syn]], minlength=4096)

    arrays = (parity, leader_weight, tie_size, leaders, best)
    for a in arrays:
        a.setflags(write=False)
    return CosetTable24(*arrays)


def _as_uint32(y) -> np.ndarray:
    return np.asarray(y, dtype=np.uint32)


def decode23_array(y) -> np.ndarray:
    """Nearest G23 codeword for each 23-bit word in ``y``."""
    t = syndrome_table_23()
    y = _as_uint32(y)
    return y ^ t.leaders[t.syndrome(y)]


def decode23(received: BitWord) -> DecodeOutcome:
    _require_length(received, 23)
    t = syndrome_table_23()
    e = int(t.leaders[int(t.syndrome(received.bits))])
    return DecodeOutcome(BitWord(received.bits ^ e, 23), e.bit_count(), 1)


def tie_set(received: BitWord) -> list[BitWord]:
    """All G24 codewords at minimum distance from ``received``."""
    _require_length(received, 24)
    t = coset_table_24()
    s = int(t.syndrome(received.bits))
    return [BitWord(received.bits ^ e, 24) for e in t.leaders_of(s)]


def _pick_column(s: np.ndarray, policy: TieBreak, rng: np.random.Generator) -> np.ndarray:
    t = coset_table_24()
    if policy is TieBreak.RANDOM:
        k = t.tie_size[s]
    elif policy is TieBreak.AGREEMENT:
        k = t.best_agreement[s]
    else:
        raise ContractError(f"unknown tie-break policy {policy!r}")
    # one uniform draw per word, tied or not, so stream use is input independent
    u = rng.random(s.shape)
    return np.minimum((u * k).astype(np.int64), k - 1)


def decode24_array(y, policy: TieBreak, rng: np.random.Generator) -> np.ndarray:
    """Nearest G24 codeword for each 24-bit word, ties broken by ``policy``."""
    t = coset_table_24()
    y = _as_uint32(y)
    s = t.syndrome(y)
    return y ^ t.leaders[s, _pick_column(s, policy, rng)]


def decode24(
    received: BitWord,
    policy: TieBreak = TieBreak.RANDOM,
    rng: np.random.Generator | None = None,
) -> DecodeOutcome:
    """Complete ML decoding for G24.

    With ``TieBreak.AGREEMENT`` a tied codeword is chosen among those whose
    information symbols agree with the received ones in the most positions;
    remaining ties are broken uniformly at random.
    """
    _require_length(received, 24)
    if rng is None:
        rng = np.random.default_rng()
    t = coset_table_24()
    s = t.syndrome(np.array([received.bits]))
    e = int(t.leaders[s, _pick_column(s, policy, rng)][0])
    return DecodeOutcome(
        BitWord(received.bits ^ e, 24), e.bit_count(), int(t.tie_size[s[0]])
    )


def decode_passthrough_array(y) -> np.ndarray:
    """Information words: decoded when unique, raw received bits on a tie."""
    t = coset_table_24()
    y = _as_uint32(y)
    s = t.syndrome(y)
    unique = t.tie_size[s] == 1
    corrected = y ^ t.leaders[s, 0]
    return np.where(unique, corrected, y) & INFO_MASK


def decode_passthrough(received: BitWord) -> BitWord:
    _require_length(received, 24)
    return BitWord(int(decode_passthrough_array([received.bits])[0]), 12)


def decode_d23_on_g24_array(y) -> np.ndarray:
    """Decode the first 23 symbols with the G23 decoder, then re-extend."""
    y = _as_uint32(y)
    return extend_parity_array(decode23_array(y & MASK23))


def decode_d23_on_g24(received: BitWord) -> DecodeOutcome:
    _require_length(received, 24)
    inner = decode23(BitWord(received.bits & MASK23, 23))
    c = extend_parity(inner.codeword)
    return DecodeOutcome(c, (c.bits ^ received.bits).bit_count(), 1)
