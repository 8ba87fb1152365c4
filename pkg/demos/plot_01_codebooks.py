"""
Building the Golay codebooks
============================

Both codes come out of a single generator polynomial.  Each of the 4096
information words is encoded once and the arrays are cached.
"""

import numpy as np

from golay_hd import BitWord, build_g23, build_g24, encode, extend_parity, weight

g23 = build_g23()
g24 = build_g24()
print(g23.variant, g23.n, "symbols, rate", g23.rate)
print(g24.variant, g24.n, "symbols, rate", g24.rate)

###############################################################################
# Weight distributions
# --------------------
# The minimum weights are 7 and 8, so G23 corrects three errors and G24
# detects every pattern of four.

print(g23.weight_distribution())
print(g24.weight_distribution())
print("min weights:", g23.min_weight(), g24.min_weight())

###############################################################################
# Encoding one word
# -----------------
# The first twelve symbols carry the information word unchanged.

info = BitWord.from_bits([1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0])
c23 = encode(info, g23)
c24 = extend_parity(c23)
print(info)
print(c23)
print(c24, "weight", weight(c24))
assert c24 in g24

###############################################################################
# Every G23 sphere of radius three is disjoint and together they fill the space.

from math import comb

volume = sum(comb(23, i) for i in range(4))
print(volume, "*", len(g23.codewords), "=", volume * len(g23.codewords), "== 2**23:",
      volume * len(g23.codewords) == 2**23)
g24.check()  # raises on a broken invariant
print(np.asarray(g24.codewords[:4]))
