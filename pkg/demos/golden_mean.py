"""
Golden-mean subfractal of the Cantor maps
==========================================

Forbid the word ``11`` (gap set S = {1, 2, 3, ...}) and code points with the
middle-thirds maps ``x/3`` and ``x/3 + 2/3``.  The resulting set has
dimension ``ln(phi) / ln 3``.  This script reaches that number three ways:
the gap series root, the 2x2 transfer matrix, and box counting.
"""

import math

from sgapdim import (
    GapSet,
    SimilarityIFS,
    box_counts,
    count_core,
    count_language,
    cross_check_golden_mean,
    default_scales,
    estimate_box_dimension,
    generate_points,
    solve_dimension_root,
)

S = GapSet.naturals_from(1)

# %%
# Counting words
# --------------
# Allowed words of length n are counted by Fibonacci numbers.

for n in range(1, 11):
    print(f"n={n:2d}  |L_n|={count_language(n, S):4d}  |G_n|={count_core(n, S):3d}")

# %%
# Solving F(t) = 1
# ----------------
# The enclosure comes from bisection on certified series bounds only.

enc = solve_dimension_root(1 / 3, 1 / 3, S)
exact = math.log((1 + math.sqrt(5)) / 2) / math.log(3)
print(f"\nroot enclosure {enc}, width {enc.width:.2g}")
print(f"closed form     {exact:.12f}")

# %%
# Transfer-matrix cross-check
# ---------------------------

rep = cross_check_golden_mean(1 / 3, 1 / 3)
print(f"spectral root {rep.h_spectral:.12f}, difference {rep.difference:.2g}")

# %%
# Box counting
# ------------
# Grid sides 3^-j match the map ratio, so cylinder images line up with cells.

cloud = generate_points(SimilarityIFS.cantor(), S, depth=14)
series = box_counts(cloud, default_scales(1, 8, 3.0))
for r, N, _, _ in series.rows():
    print(f"r=3^{round(-math.log(r, 3))}  N={N}")
slope, stderr = estimate_box_dimension(series)
print(f"box estimate {slope:.4f} +/- {stderr:.3f} from {cloud.count} points")
