"""
Prime gaps
==========

Let the number of zeros between consecutive ones be prime.  The gap set is
infinite but sparse, so the series needs a certified tail bound.  We look at
entropy, the dimension root for a few ratios, and finite-n pressure.
"""

import math

from sgapdim import GapSet, pressure_estimate, solve_dimension_root, solve_entropy

S = GapSet.primes()
print("first gaps:", S.elements_upto(30).tolist())

# %%
# Entropy
# -------
# lambda solves sum_{p prime} lambda^(p+1) = 1.

lam, ent = solve_entropy(S)
print(f"lambda = {lam.mid:.10f}, entropy = {ent:.10f} nats = {ent / math.log(2):.10f} bits")

# %%
# Dimension for equal ratios
# --------------------------
# With c0 = c1 = 1/2 the root is the entropy in bits.

for c in (0.2, 1 / 3, 0.5, 0.8):
    h = solve_dimension_root(c, c, S)
    print(f"c={c:.3f}  h={h.mid:.10f}")

# %%
# Finite-n pressure
# -----------------
# At t = h the language pressure (1/n) ln sum tends to zero, slowly.

h = solve_dimension_root(0.5, 0.5, S).mid
for n in (5, 10, 20, 40, 60):
    p = pressure_estimate(n, h, 0.5, 0.5, S)
    print(f"n={n:2d}  sum={p.weighted_sum:.6f}  P_n(h)={p.pressure:+.6f}")
