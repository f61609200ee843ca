"""
Bounds for non-similarity maps
==============================

When the maps only satisfy two-sided contraction bounds, lower ratios give a
lower dimension bound ``h`` and upper ratios give ``H``.  Widening the ratio
interval widens the gap between them.
"""

from sgapdim import ContractionPair, GapSet, bounds, pressure_table

S = GapSet.naturals_from(1)

for width in (0.0, 0.02, 0.05, 0.1):
    pair = ContractionPair(0.35 - width, 0.35 + width, 0.35 - width, 0.35 + width)
    b = bounds(pair, S)
    print(f"c in [{0.35 - width:.2f}, {0.35 + width:.2f}]  h={b.h.mid:.6f}  H={b.H.mid:.6f}")

# %%
# Pressure under both sets of ratios
# ----------------------------------
# The upper-ratio sums dominate the lower ones at every (n, t).

pair = ContractionPair(0.3, 0.4, 0.3, 0.4)
for n, t, s_lo, p_lo, s_hi, p_hi in pressure_table([5, 10, 20], [0.25, 0.5, 1.0], pair, S):
    print(f"n={n:2d} t={t:.2f}  P_lower={p_lo:+.5f}  P_upper={p_hi:+.5f}")
