"""Acceptance criteria, one test per criterion.

Every test records a single PASS/FAIL line; the lines are echoed at the end
of the pytest run (see ``conftest.py``) and also printed inline under ``-s``::

    pytest tests/test_acceptance.py -s

Tolerances are pinned below and are not tuned to make results pass.
"""

import math
import subprocess
import sys
import time
from fractions import Fraction

import pytest
from scipy.optimize import brentq

from golay_hd import analysis as an
from golay_hd import verify
from golay_hd.montecarlo import DECODERS, SimConfig, run_point

pytestmark = pytest.mark.slow

LINES: list[str] = []

LEMMA1_BUDGET_S = 10.0
THEOREM1_BUDGET_S = 60.0
IDENTITY_TOL = 1e-12
SIGMAS = 3.0
MC_TARGETS = (1e-2, 1e-3)
MC_MIN_ERRORS = 100
MC_POINT_BUDGET_S = 10.0
AGREEMENT_PUBLISHED = 3.1
AGREEMENT_SIM_TOL = 0.15
AGREEMENT_SIM_EBNO_DB = 4.0
PASSTHROUGH_COMPARISON = 2.6
CWER_SEP_TOL_DB = 1e-3
BER_SEP_DB, BER_SEP_TOL_DB = 0.13, 0.03
GAIN_DB, GAP_DB, GAIN_TOL_DB = 2.1, 8.4, 0.1
TIGHTNESS_DB = 0.1
TIGHTNESS_GRID = (1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0)


def record(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}  {title}: {detail}"
    LINES.append(line)
    print(line)
    assert ok, line


def rounds_to(x, target):
    return round(float(x), 1) == target


def p_for_cwer(target):
    return brentq(lambda p: an.cwer_g23(p) - target, 1e-6, 0.5)


def test_c01_lemma_five_positions(g24):
    r = verify.verify_lemma_five_positions(g24)
    ok = r.passed and r.checked == 42504 and r.seconds < LEMMA1_BUDGET_S
    record(1, "five-position covering", ok,
           f"{r.checked} sets, histogram {r.details['count_histogram']}, {r.seconds:.2f} s")


def test_c02_lemma_four_positions(g24):
    r = verify.verify_lemma_four_positions(g24)
    ok = r.passed and r.checked == 10626
    record(2, "four-position covering", ok,
           f"{r.checked} sets, histogram {r.details['count_histogram']}")


def test_c03_theorem_cosets(g24):
    r = verify.verify_theorem_cosets(g24)
    ok = (r.passed and r.checked == 4096 and r.details["weight_evaluations"] == 2**24
          and r.seconds < THEOREM1_BUDGET_S)
    record(3, "coset dichotomy", ok,
           f"{r.checked} cosets, {r.details['weight_evaluations']} weights, {r.seconds:.2f} s")


def test_c04_cwer_identity():
    r = verify.verify_cwer_identity()
    d = r.details
    ok = (r.passed and 5 * math.comb(23, 3) == math.comb(23, 4) == 8855
          and d["max_abs_difference_literal"] < IDENTITY_TOL)
    record(4, "CWER identity", ok,
           f"5*C(23,3)={d['five_times_c23_3']}, C(23,4)={d['c23_4']}, "
           f"max diff {d['max_abs_difference_literal']:.2e}")


def test_c05_monte_carlo_agreement():
    # passthrough has no closed-form CWER and is excluded
    decoders = [d for d in DECODERS if d != "passthrough"]
    worst, slowest, ok = 0.0, 0.0, True
    for target in MC_TARGETS:
        p = p_for_cwer(target)
        for i, dec in enumerate(decoders):
            cfg = SimConfig(dec, seed=500 + i, min_codeword_errors=MC_MIN_ERRORS)
            t0 = time.perf_counter()
            r = run_point(cfg, p)
            slowest = max(slowest, time.perf_counter() - t0)
            ref = an.cwer_g23(p) if DECODERS[dec] == "G23" else an.cwer_g24(p)
            z = abs(r.cwer - ref) / math.sqrt(ref * (1 - ref) / r.trials)
            worst = max(worst, z)
            ok &= z <= SIGMAS
    ok &= slowest < MC_POINT_BUDGET_S
    record(5, "Monte Carlo CWER vs analytic", ok,
           f"{len(decoders)} decoders x {len(MC_TARGETS)} points, worst |z|={worst:.2f}, "
           f"slowest point {slowest:.2f} s")


def test_c06_agreement_constant():
    c = verify.compute_agreement_constant()
    oracle = float(c.expected_sys_errors)
    p = float(an.bsc_p(AGREEMENT_SIM_EBNO_DB, an.RATE_G24))
    r = run_point(SimConfig("ml24_agreement", seed=6, min_codeword_errors=100_000), p)
    sim = r.sys_errors_per_cw_error
    parts = {
        "oracle rounds to 3.1": rounds_to(oracle, AGREEMENT_PUBLISHED),
        "pick prob 1/6": c.correct_pick_prob == Fraction(1, 6),
        "sim within 0.15": abs(sim - AGREEMENT_PUBLISHED) <= AGREEMENT_SIM_TOL,
    }
    record(6, "agreement constant", all(parts.values()),
           f"oracle {c.expected_sys_errors} = {oracle:.4f}, pick {c.correct_pick_prob}, "
           f"sim@4dB {sim:.4f}; " + ", ".join(f"{k}={v}" for k, v in parts.items()))


def test_c07_passthrough_constant():
    c = verify.compute_passthrough_constant()
    comparison = float(c.codeword_decoder)
    parts = {
        "passthrough == 2": c.passthrough == 2,
        "comparison rounds to 2.6": rounds_to(comparison, PASSTHROUGH_COMPARISON),
    }
    record(7, "passthrough constant", all(parts.values()),
           f"passthrough {c.passthrough}, (5/6)*oracle = {comparison:.4f}; "
           + ", ".join(f"{k}={v}" for k, v in parts.items()))


def test_c08_cwer_separation():
    penalty = 10 * math.log10(24 / 23)
    seps = {t: an.ebno_at_target(an.cwer_g24_db, t) - an.ebno_at_target(an.cwer_g23_db, t)
            for t in (1e-2, 1e-4, 1e-6)}
    ok = all(abs(s - penalty) <= CWER_SEP_TOL_DB for s in seps.values())
    record(8, "CWER curve separation", ok,
           f"penalty {penalty:.5f} dB, "
           + ", ".join(f"{t:g}: {s:.5f}" for t, s in seps.items()))


def test_c09_ber_separation():
    sep = (an.ebno_at_target(an.ber_g24_agreement_db, 1e-6)
           - an.ebno_at_target(an.ber_g23_db, 1e-6))
    record(9, "BER curve separation", abs(sep - BER_SEP_DB) <= BER_SEP_TOL_DB,
           f"{sep:.4f} dB vs {BER_SEP_DB} +/- {BER_SEP_TOL_DB}")


def test_c10_coding_gain_and_gap():
    f = an.derived_figures(target_ber=1e-6)
    gain, gap = f["coding_gain_db"], f["capacity_gap_db"]
    parts = {
        "gain": abs(gain - GAIN_DB) <= GAIN_TOL_DB,
        "gap": abs(gap - GAP_DB) <= GAIN_TOL_DB,
    }
    record(10, "coding gain and capacity gap", all(parts.values()),
           f"gain {gain:.4f} dB (want {GAIN_DB}), gap {gap:.4f} dB (want {GAP_DB}), "
           f"G24 at {f['ebno_db_g24_agreement']:.4f} dB")


def test_c11_random_mode_ratio():
    exact = (Fraction(1, 3) / Fraction(7, 23)) == Fraction(23, 21)
    p = p_for_cwer(1e-3)
    analytic = an.ber_g24(p, "random") / an.ber_g23(p)
    a = run_point(SimConfig("ml24_random", seed=111, min_codeword_errors=1000), p)
    b = run_point(SimConfig("ml23", seed=112, min_codeword_errors=1000), p)
    ratio = a.ber / b.ber
    sigma = ratio * math.hypot(a.ber_sigma / a.ber, b.ber_sigma / b.ber)
    z = abs(ratio - 23 / 21) / sigma
    ok = exact and math.isclose(analytic, 23 / 21, rel_tol=1e-12) and z <= SIGMAS
    record(11, "random-mode BER ratio", ok,
           f"analytic {analytic:.12f}, simulated {ratio:.4f} +/- {sigma:.4f} (|z|={z:.2f})")


def test_c12_ber_approximation_tightness():
    gaps, ok = [], True
    for i, e in enumerate(TIGHTNESS_GRID):
        p = float(an.bsc_p(e, an.RATE_G23))
        # the 1 dB point sits within 0.01 dB of the threshold, so resolve it to ~1e-3 dB
        r = run_point(SimConfig("ml23", seed=1200 + i, min_codeword_errors=3_000_000,
                                max_trials=10**7, workers=4), p, point_index=i, ebno_db=e)
        gap = e - an.ebno_at_target(an.ber_g23_db, r.ber)
        gaps.append(gap)
        ok &= abs(gap) <= TIGHTNESS_DB
    record(12, "BER approximation tightness", ok,
           "horizontal gaps " + ", ".join(f"{e:g}dB:{g:+.3f}" for e, g in zip(TIGHTNESS_GRID, gaps)))


def _cli(*args):
    res = subprocess.run([sys.executable, "-m", "golay_hd", *args],
                         capture_output=True, check=True)
    return res.stdout


def test_c13_cli_determinism():
    sim = ["simulate", "--decoder", "ml24_agreement", "--grid", "2:4:1", "--seed", "13",
           "--min-errors", "200"]
    outputs = [_cli(*sim), _cli(*sim), _cli(*sim, "--workers", "4"), _cli(*sim, "--workers", "2")]
    curves = [_cli("curves"), _cli("curves")]
    ok = len(set(outputs)) == 1 and len(set(curves)) == 1
    record(13, "CLI determinism", ok,
           f"{len(outputs)} simulate runs over workers 1/1/4/2 and {len(curves)} curve runs, "
           f"distinct outputs {len(set(outputs))}/{len(set(curves))}")


@pytest.fixture(scope="module", autouse=True)
def _banner():
    yield
    print("\n" + "\n".join(LINES))
