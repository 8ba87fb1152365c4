"""Closed-form error rates for hard-decision Golay decoding over AWGN.

Probabilities accept scalars or numpy arrays.  Error rates are evaluated as
sums of the binomial tail (the terms that *do* produce an error) rather than
as one minus the head, so they stay accurate when ``p`` is tiny.

The BER expressions assume each codeword error lands on a minimum-weight
neighbour; they are close to simulation above about 1 dB Eb/N0 and are
flagged as approximate below that (see :func:`ber_approximation_valid`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Literal

import numpy as np
from scipy import optimize, special

from golay_hd.core import ContractError

RATE_G23 = Fraction(12, 23)
RATE_G24 = Fraction(12, 24)
BER_VALID_ABOVE_DB = 1.0
DEFAULT_BRACKET = (-5.0, 15.0)
DEFAULT_TOL_DB = 1e-4


class NoSolutionError(ValueError):
    """The target value is not crossed inside the search bracket."""


def _scalar_or_array(x, like):
    return float(x) if np.ndim(like) == 0 else x


def _check_prob(p) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if np.any(~np.isfinite(a)) or np.any(a < 0) or np.any(a > 1):
        raise ContractError("crossover probability must lie in [0, 1]")
    return a


def _check_rate(rate) -> float:
    r = float(rate)
    if not 0 < r <= 1:
        raise ContractError(f"code rate must lie in (0, 1], got {rate}")
    return r


def q_function(x):
    """Gaussian tail probability Q(x) = P(N(0,1) > x)."""
    out = 0.5 * special.erfc(np.asarray(x, dtype=float) / math.sqrt(2.0))
    return _scalar_or_array(out, x)


def bsc_p(ebno_db, rate):
    """Crossover probability of hard-decision BPSK at the given Eb/N0 and rate."""
    r = _check_rate(rate)
    ebno = 10.0 ** (np.asarray(ebno_db, dtype=float) / 10.0)
    return _scalar_or_array(q_function(np.sqrt(2.0 * r * ebno)), ebno_db)


def uncoded_ber(ebno_db):
    return bsc_p(ebno_db, 1)


def ebno_db_for_p(p, rate):
    """Inverse of :func:`bsc_p`."""
    r = _check_rate(rate)
    x = special.erfcinv(2.0 * np.asarray(p, dtype=float)) * math.sqrt(2.0)
    return _scalar_or_array(10.0 * np.log10(x**2 / (2.0 * r)), p)


def _binomial_tail(p: np.ndarray, n: int, start: int) -> np.ndarray:
    q = 1.0 - p
    return sum(math.comb(n, i) * p**i * q ** (n - i) for i in range(start, n + 1))


def cwer_g23(p):
    """Codeword error rate of the complete ML decoder for G23.

    Errors occur exactly when the channel flips four or more symbols.
    """
    a = _check_prob(p)
    return _scalar_or_array(_binomial_tail(a, 23, 4), p)


def cwer_g24(p):
    """Codeword error rate of the complete ML decoder for G24.

    Five or more flips always fail; four flips fail unless the decoder picks
    the transmitted word from its six-way tie, which happens 1/6 of the time.
    """
    a = _check_prob(p)
    four = math.comb(24, 4) * a**4 * (1.0 - a) ** 20
    return _scalar_or_array(5.0 / 6.0 * four + _binomial_tail(a, 24, 5), p)


def ber_g23(p):
    return _scalar_or_array(7.0 / 23.0 * np.asarray(cwer_g23(p)), p)


def agreement_ber_factor() -> Fraction:
    """BER/CWER ratio of the agreement decoder, from the exhaustive tie analysis."""
    from golay_hd.verify import compute_agreement_constant

    return compute_agreement_constant().expected_sys_errors / 12


def ber_g24(p, mode: Literal["random", "agreement"] = "agreement"):
    if mode == "random":
        factor = 1.0 / 3.0
    elif mode == "agreement":
        factor = float(agreement_ber_factor())
    else:
        raise ContractError(f"mode must be 'random' or 'agreement', got {mode!r}")
    return _scalar_or_array(factor * np.asarray(cwer_g24(p)), p)


def ber_approximation_valid(ebno_db):
    return np.asarray(ebno_db) > BER_VALID_ABOVE_DB


def capacity_ebno_db(rate):
    """Shannon-limit Eb/N0 (dB) for real Gaussian signalling at ``rate`` bits/dim."""
    r = _check_rate(rate)
    return 10.0 * math.log10((2.0 ** (2.0 * r) - 1.0) / (2.0 * r))


def ebno_at_target(
    curve: Callable[[float], float],
    target: float,
    bracket: tuple[float, float] = DEFAULT_BRACKET,
    tol: float = DEFAULT_TOL_DB,
) -> float:
    """Eb/N0 (dB) at which a decreasing error-rate curve reaches ``target``."""
    lo, hi = bracket
    log_t = math.log(target)

    def f(x):
        v = float(curve(x))
        return math.log(v) - log_t if v > 0 else -1e300

    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo > 0 > f_hi or f_lo == 0 or f_hi == 0):
        raise NoSolutionError(
            f"target {target:g} not crossed on [{lo}, {hi}] dB "
            f"(curve runs {curve(lo):g} .. {curve(hi):g})"
        )
    return optimize.bisect(f, lo, hi, xtol=tol)


# curves as functions of Eb/N0 in dB

def cwer_g23_db(ebno_db):
    return cwer_g23(bsc_p(ebno_db, RATE_G23))


def cwer_g24_db(ebno_db):
    return cwer_g24(bsc_p(ebno_db, RATE_G24))


def ber_g23_db(ebno_db):
    return ber_g23(bsc_p(ebno_db, RATE_G23))


def ber_g24_random_db(ebno_db):
    return ber_g24(bsc_p(ebno_db, RATE_G24), "random")


def ber_g24_agreement_db(ebno_db):
    return ber_g24(bsc_p(ebno_db, RATE_G24), "agreement")


CURVE_COLUMNS = (
    "ebno_db",
    "p_g23",
    "p_g24",
    "cwer_g23",
    "cwer_g24",
    "ber_g23",
    "ber_g24_random",
    "ber_g24_agreement",
    "ber_uncoded",
    "ber_approx_valid",
)


def curve_table(ebno_db) -> dict[str, np.ndarray]:
    """All analytic curves on a grid of Eb/N0 values, keyed by column name."""
    e = np.atleast_1d(np.asarray(ebno_db, dtype=float))
    p23, p24 = bsc_p(e, RATE_G23), bsc_p(e, RATE_G24)
    return {
        "ebno_db": e,
        "p_g23": p23,
        "p_g24": p24,
        "cwer_g23": cwer_g23(p23),
        "cwer_g24": cwer_g24(p24),
        "ber_g23": ber_g23(p23),
        "ber_g24_random": ber_g24(p24, "random"),
        "ber_g24_agreement": ber_g24(p24, "agreement"),
        "ber_uncoded": uncoded_ber(e),
        "ber_approx_valid": ber_approximation_valid(e).astype(int),
    }


def derived_figures(target_ber: float = 1e-6, cwer_targets=(1e-2, 1e-4, 1e-6)) -> dict:
    """Scalar figures of merit read off the analytic curves."""
    from golay_hd.verify import compute_agreement_constant, compute_passthrough_constant

    uncoded = ebno_at_target(uncoded_ber, target_ber)
    g24 = ebno_at_target(ber_g24_agreement_db, target_ber)
    g23 = ebno_at_target(ber_g23_db, target_ber)
    cwer_sep = {
        f"{t:g}": ebno_at_target(cwer_g24_db, t) - ebno_at_target(cwer_g23_db, t)
        for t in cwer_targets
    }
    agreement = compute_agreement_constant()
    passthrough = compute_passthrough_constant()
    return {
        "target_ber": target_ber,
        "ebno_db_uncoded": uncoded,
        "ebno_db_g24_agreement": g24,
        "ebno_db_g23": g23,
        "coding_gain_db": uncoded - g24,
        "capacity_ebno_db_rate_half": capacity_ebno_db(0.5),
        "capacity_gap_db": g24 - capacity_ebno_db(0.5),
        "cwer_separation_db": cwer_sep,
        "rate_penalty_db": 10.0 * math.log10(24 / 23),
        "ber_separation_db": g24 - g23,
        "beta": agreement.expected_sys_errors / 12,
        "agreement_sys_errors": agreement.expected_sys_errors,
        "agreement_correct_pick_prob": agreement.correct_pick_prob,
        "passthrough_sys_errors": passthrough.passthrough,
        "codeword_decoder_sys_errors": passthrough.codeword_decoder,
    }
