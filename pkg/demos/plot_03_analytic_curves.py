"""
Analytic error-rate curves
==========================

Closed-form CWER and BER as a function of Eb/N0 on the hard-decision
channel, and the figures read off them at BER 1e-6.
"""

import numpy as np

from golay_hd import analysis as an

grid = np.arange(0.0, 10.01, 1.0)
table = an.curve_table(grid)
print("  ".join(f"{c:>17}" for c in an.CURVE_COLUMNS[:6]))
for i in range(len(grid)):
    print("  ".join(f"{table[c][i]:17.6g}" for c in an.CURVE_COLUMNS[:6]))

###############################################################################
# Both CWER curves are the same function of p; only the rate differs, so they
# are shifted by 10*log10(24/23) dB everywhere.

for target in (1e-2, 1e-4, 1e-6):
    shift = an.ebno_at_target(an.cwer_g24_db, target) - an.ebno_at_target(an.cwer_g23_db, target)
    print(f"CWER {target:g}: shift {shift:.4f} dB")

###############################################################################
# Derived figures
# ---------------

figs = an.derived_figures(target_ber=1e-6)
for key in ("ebno_db_uncoded", "ebno_db_g24_agreement", "ebno_db_g23", "coding_gain_db",
            "capacity_gap_db", "ber_separation_db", "beta"):
    print(f"{key:>24}: {figs[key]}")
