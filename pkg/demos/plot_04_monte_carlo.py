"""
Monte Carlo simulation
======================

Seeded simulation of every decoder over the BSC.  Each grid point runs until
a target number of codeword errors, and results do not depend on the worker
count.
"""

from golay_hd import analysis as an
from golay_hd.montecarlo import DECODERS, SimConfig, run_curve

grid = (2.0, 3.0, 4.0)
for decoder in DECODERS:
    cfg = SimConfig(decoder, grid=grid, seed=1, min_codeword_errors=300)
    for r in run_curve(cfg):
        lo, hi = r.cwer_interval
        print(f"{decoder:>15} {r.ebno_db:4.1f} dB  CWER {r.cwer:.4g} [{lo:.4g}, {hi:.4g}]  "
              f"BER {r.ber:.4g}  sys errors/cw error {r.sys_errors_per_cw_error:.3f}")

###############################################################################
# Comparing with the closed forms
# -------------------------------

cfg = SimConfig("ml23", grid=grid, seed=2, min_codeword_errors=2000)
for r in run_curve(cfg):
    print(f"{r.ebno_db:4.1f} dB  simulated {r.cwer:.4g}  analytic {an.cwer_g23(r.p):.4g}")

###############################################################################
# Threads do not change the answer.

a = run_curve(SimConfig("ml24_agreement", grid=(3.0,), seed=5, min_codeword_errors=200))
b = run_curve(SimConfig("ml24_agreement", grid=(3.0,), seed=5, min_codeword_errors=200,
                        workers=4))
print("identical:", a == b)
