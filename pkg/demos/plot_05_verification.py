"""
Exhaustive verification
=======================

The structural facts the decoders rely on are checked by brute force over
the codebook, independent of the decoding tables.
"""

from golay_hd import verify

for report in verify.run_all():
    print(report.summary())

###############################################################################
# The agreement constant
# ----------------------
# Averaged over all 10626 weight-four error patterns, exactly.

c = verify.compute_agreement_constant()
print("expected systematic errors per codeword error:", c.expected_sys_errors,
      f"= {float(c.expected_sys_errors):.4f}")
print("probability the agreement pick is correct:", c.correct_pick_prob)
print("random pick, expected systematic errors:", c.random_expected_sys_errors)

p = verify.compute_passthrough_constant()
print("passthrough systematic errors per tie:", p.passthrough)

###############################################################################
# The simulated constant depends on the operating point
# -----------------------------------------------------
# At moderate SNR, error patterns heavier than four still contribute, so the
# simulated ratio sits above the exact weight-four value and approaches it as
# Eb/N0 grows.

from golay_hd import analysis as an
from golay_hd.montecarlo import SimConfig, run_point

for i, ebno in enumerate((3.0, 4.0, 5.0, 6.0)):
    p = float(an.bsc_p(ebno, an.RATE_G24))
    r = run_point(SimConfig("ml24_agreement", seed=9, min_codeword_errors=20_000), p, i, ebno)
    print(f"{ebno:.0f} dB: {r.sys_errors_per_cw_error:.3f} systematic errors per codeword error")
