# Row statistics at scale, against their closed-form windows.
#
# At n in the thousands the exact law is out of reach, but sampling is
# cheap: a compiled kernel inserts letters in bulk, so 10^4 diagrams of
# 10^4 boxes take a couple of seconds. Every run is reproducible from
# (seed, stream).

import numpy as np

from schurweyl.bounds import row_mean_bounds, row_mean_bounds_sharp, variance_bound
from schurweyl.sampling import sample_sw_shapes

alpha = (0.5, 0.3, 0.2)
n = 10_000
shapes = sample_sw_shapes(alpha, n, size=4000, seed=42)
print(f"alpha {alpha}, n = {n}, {shapes.shape[0]} samples")
print()

print(" k   mean row     window (basic)            window (sharp)")
for k in (1, 2, 3):
    mean_k = shapes[:, k - 1].mean()
    lo, hi = row_mean_bounds(alpha, k, n)
    lo_s, hi_s = row_mean_bounds_sharp(alpha, k, n)
    inside = lo <= mean_k <= hi and lo_s <= mean_k <= hi_s
    print(f" {k}   {mean_k:9.1f}   [{lo:8.1f}, {hi:8.1f}]   "
          f"[{lo_s:8.1f}, {hi_s:8.1f}]   {'ok' if inside else 'OUT'}")

# The rows fluctuate on the sqrt(n) scale; the variance bound 16n is a
# bounded-difference estimate (each letter moves a row by at most one in
# each direction) and is far from tight.

print()
print(" k   row variance   bound 16n")
for k in (1, 2, 3):
    var_k = shapes[:, k - 1].var(ddof=1)
    print(f" {k}   {var_k:12.1f}   {variance_bound(n):9.1f}")

# A coarse text histogram of the first row around its mean.

print()
vals = shapes[:, 0]
lo_edge, hi_edge = np.percentile(vals, [0.5, 99.5])
counts, edges = np.histogram(vals, bins=13, range=(lo_edge, hi_edge))
peak = counts.max()
print(f"first row around mean {vals.mean():.0f}:")
for c, left in zip(counts, edges):
    print(f"  {int(left):6d} {'#' * int(40 * c / peak)}")
