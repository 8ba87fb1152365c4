"""
Decoding and four-error ties
============================

G23 is perfect, so every received word has a unique nearest codeword.
In G24 a received word at distance four sits between six codewords, and the
decoder has to choose.
"""

import numpy as np

from golay_hd import (
    BitWord,
    TieBreak,
    build_g24,
    decode23,
    decode24,
    decode_d23_on_g24,
    decode_passthrough,
    distance,
    tie_set,
)

rng = np.random.default_rng(3)
g24 = build_g24()
sent = BitWord(int(g24.codewords[1234]), 24)

###############################################################################
# Three errors are always corrected
# ---------------------------------

err3 = BitWord((1 << 2) | (1 << 9) | (1 << 20), 24)
out = decode24(sent ^ err3, rng=rng)
print("3 errors:", out.codeword == sent, "distance", out.distance, "ties", out.tie_set_size)

###############################################################################
# Four errors land in a tie
# -------------------------

err4 = BitWord((1 << 0) | (1 << 5) | (1 << 14) | (1 << 22), 24)
received = sent ^ err4
ties = tie_set(received)
print(len(ties), "codewords at distance", {distance(received, c) for c in ties})
print("transmitted word among them:", sent in ties)

###############################################################################
# Tie-break policies
# ------------------
# Random picks any of the six.  Agreement keeps those whose information
# symbols match the received ones best, then picks at random.  Which one
# wins depends on where the errors fell: errors confined to the parity
# symbols leave the transmitted word in best agreement.

parity_only = BitWord(sum(1 << i for i in (12, 15, 18, 21)), 24)
for name, e in (("info+parity errors", err4), ("parity-only errors", parity_only)):
    for policy in TieBreak:
        hits = sum(decode24(sent ^ e, policy, rng).codeword == sent for _ in range(3000))
        print(f"{name}, {policy.name:>9}: correct {hits / 3000:.3f}")

###############################################################################
# Averaged over random four-error patterns both policies are right one time
# in six; agreement wins on information bit errors instead.

for policy in TieBreak:
    hits = info_errors = 0
    for _ in range(6000):
        pos = rng.choice(24, size=4, replace=False)
        out = decode24(sent ^ BitWord(int(sum(1 << int(i) for i in pos)), 24), policy, rng)
        hits += out.codeword == sent
        info_errors += ((out.codeword.bits ^ sent.bits) & 0xFFF).bit_count()
    print(f"{policy.name:>9}: correct {hits / 6000:.3f}, info errors per tie "
          f"{info_errors / 6000:.3f}")

###############################################################################
# Passthrough returns the received information symbols on a tie, and the
# G23-on-G24 decoder simply ignores the parity symbol.

print("passthrough:", decode_passthrough(received))
print("d23 on g24 :", decode_d23_on_g24(received).codeword)
print("single G23 :", decode23(BitWord(received.bits & (2**23 - 1), 23)).distance)
