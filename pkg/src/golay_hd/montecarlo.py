"""Seeded Monte Carlo simulation of Golay decoding over a binary symmetric channel.

Trials are generated in fixed-size chunks.  Chunk ``k`` of grid point ``i``
draws from its own counter-based stream, keyed by ``(seed, i, k)``, so the
result of a run does not depend on how many worker threads evaluate the
chunks or in which order they finish.  Chunks are reduced in index order
and the run stops at the exact trial where the error target is reached.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import stats

from golay_hd import analysis
from golay_hd.core import INFO_MASK, ContractError, build
from golay_hd.decoder import (
    TieBreak,
    decode23_array,
    decode24_array,
    decode_d23_on_g24_array,
    decode_passthrough_array,
)

DECODERS = {
    "ml23": "G23",
    "ml24_random": "G24",
    "ml24_agreement": "G24",
    "passthrough": "G24",
    "d23_on_g24": "G24",
}
CHUNK_SIZE = 1 << 14
GENERATOR = "numpy.random.Philox keyed by SeedSequence(seed, spawn_key=(point, chunk))"
Z95 = float(stats.norm.ppf(0.975))


@dataclass(frozen=True)
class SimConfig:
    decoder: str
    grid: tuple[float, ...] = ()  # Eb/N0 in dB
    p_values: tuple[float, ...] = ()
    seed: int = 0
    min_codeword_errors: int = 100
    max_trials: int = 10**8
    all_zero: bool = False
    workers: int = 1
    chunk_size: int = CHUNK_SIZE
    variant: str | None = None

    def __post_init__(self):
        if self.decoder not in DECODERS:
            raise ContractError(
                f"unknown decoder {self.decoder!r}; valid: {', '.join(DECODERS)}"
            )
        expected = DECODERS[self.decoder]
        if self.variant is None:
            object.__setattr__(self, "variant", expected)
        elif self.variant != expected:
            raise ContractError(f"decoder {self.decoder} needs variant {expected}")
        object.__setattr__(self, "grid", tuple(float(x) for x in self.grid))
        object.__setattr__(self, "p_values", tuple(float(x) for x in self.p_values))
        if self.grid and self.p_values:
            raise ContractError("give either an Eb/N0 grid or explicit p values, not both")
        if self.min_codeword_errors < 1:
            raise ContractError("min_codeword_errors must be at least 1")
        if self.max_trials < self.min_codeword_errors:
            raise ContractError("max_trials must be at least min_codeword_errors")
        if not 0 <= self.seed < 2**64:
            raise ContractError("seed must be an unsigned 64-bit integer")
        if self.workers < 1 or self.chunk_size < 1:
            raise ContractError("workers and chunk_size must be positive")

    @property
    def rate(self):
        return build(self.variant).rate


@dataclass(frozen=True)
class SimResult:
    p: float
    ebno_db: float | None
    trials: int
    codeword_errors: int
    info_bit_errors: int
    info_bit_errors_sq: int = field(repr=False)

    @property
    def sys_errors_per_cw_error(self) -> float:
        return self.info_bit_errors / self.codeword_errors if self.codeword_errors else math.nan

    @property
    def cwer(self) -> float:
        return self.codeword_errors / self.trials

    @property
    def cwer_sigma(self) -> float:
        return math.sqrt(self.cwer * (1 - self.cwer) / self.trials)

    @property
    def cwer_interval(self) -> tuple[float, float]:
        return wilson_interval(self.codeword_errors, self.trials)

    @property
    def ber(self) -> float:
        return self.info_bit_errors / (12 * self.trials)

    @property
    def ber_sigma(self) -> float:
        # bit errors cluster within a codeword, so use per-codeword variance
        n = self.trials
        mean = self.info_bit_errors / n
        var = max(self.info_bit_errors_sq / n - mean * mean, 0.0)
        return math.sqrt(var / n) / 12

    @property
    def ber_interval(self) -> tuple[float, float]:
        half = Z95 * self.ber_sigma
        return max(self.ber - half, 0.0), min(self.ber + half, 1.0)

    def row(self) -> dict:
        out = asdict(self)
        del out["info_bit_errors_sq"]
        out["sys_errors_per_cw_error"] = self.sys_errors_per_cw_error
        out["cwer"] = self.cwer
        out["cwer_low"], out["cwer_high"] = self.cwer_interval
        out["ber"] = self.ber
        out["ber_low"], out["ber_high"] = self.ber_interval
        return out


def wilson_interval(k: int, n: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if n == 0:
        return 0.0, 1.0
    phat = k / n
    denom = 1 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    lo = 0.0 if k == 0 else max(centre - half, 0.0)
    hi = 1.0 if k == n else min(centre + half, 1.0)
    return lo, hi


def _rng(seed: int, point: int, chunk: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(point, chunk))
    return np.random.Generator(np.random.Philox(ss))


def _flip_mask(rng: np.random.Generator, n: int, nbits: int, p: float) -> np.ndarray:
    flips = rng.random((n, nbits)) < p
    weights = np.uint32(1) << np.arange(nbits, dtype=np.uint32)
    return (flips * weights).sum(axis=1, dtype=np.uint32)


def simulate_chunk(config: SimConfig, p: float, n: int, rng: np.random.Generator):
    """Per-trial (codeword error flag, information bit error count)."""
    codebook = build(config.variant)
    if config.all_zero:
        info = np.zeros(n, dtype=np.uint32)
    else:
        info = rng.integers(0, 4096, size=n, dtype=np.uint32)
    sent = codebook.codewords[info]
    received = sent ^ _flip_mask(rng, n, codebook.n, p)

    dec = config.decoder
    if dec == "ml23":
        decoded = decode23_array(received)
    elif dec == "ml24_random":
        decoded = decode24_array(received, TieBreak.RANDOM, rng)
    elif dec == "ml24_agreement":
        decoded = decode24_array(received, TieBreak.AGREEMENT, rng)
    elif dec == "d23_on_g24":
        decoded = decode_d23_on_g24_array(received)
    else:
        decoded = decode_passthrough_array(received)

    if dec == "passthrough":
        # only information symbols are produced, so a block error is an info error
        diff = decoded ^ info
        return diff != 0, np.bitwise_count(diff).astype(np.int64)
    diff = decoded ^ sent
    return diff != 0, np.bitwise_count(diff & INFO_MASK).astype(np.int64)


def run_point(config: SimConfig, p: float, point_index: int = 0,
              ebno_db: float | None = None) -> SimResult:
    """Simulate one crossover probability until the stopping rule fires."""
    if not (0 < p <= 0.5):
        raise ContractError(f"p must lie in (0, 1/2], got {p}")
    size = config.chunk_size
    n_chunks = -(-config.max_trials // size)

    def work(k):
        n = min(size, config.max_trials - k * size)
        return simulate_chunk(config, p, n, _rng(config.seed, point_index, k))

    trials = cw_errors = bit_errors = bit_sq = 0
    batch = config.workers
    pool = ThreadPoolExecutor(config.workers) if config.workers > 1 else None
    try:
        for lo in range(0, n_chunks, batch):
            ks = range(lo, min(lo + batch, n_chunks))
            results = list(pool.map(work, ks)) if pool else [work(k) for k in ks]
            for cw_err, bit_err in results:
                need = config.min_codeword_errors - cw_errors
                hits = np.flatnonzero(cw_err)
                if len(hits) >= need:
                    stop = hits[need - 1] + 1
                    cw_err, bit_err = cw_err[:stop], bit_err[:stop]
                trials += len(cw_err)
                cw_errors += int(cw_err.sum())
                bit_errors += int(bit_err.sum())
                bit_sq += int((bit_err * bit_err).sum())
                if cw_errors >= config.min_codeword_errors:
                    return SimResult(p, ebno_db, trials, cw_errors, bit_errors, bit_sq)
    finally:
        if pool:
            pool.shutdown()
    return SimResult(p, ebno_db, trials, cw_errors, bit_errors, bit_sq)


def operating_points(config: SimConfig) -> list[tuple[float, float | None]]:
    if config.p_values:
        return [(p, None) for p in config.p_values]
    return [(float(analysis.bsc_p(e, config.rate)), e) for e in config.grid]


def run_curve(config: SimConfig) -> list[SimResult]:
    points = operating_points(config)
    if not points:
        raise ContractError("simulation grid is empty")
    return [run_point(config, p, i, e) for i, (p, e) in enumerate(points)]
