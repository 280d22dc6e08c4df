#!/usr/bin/env python3
# Where is the first-power bound tightest? Scan the margin over a lattice,
# then polish the minimizer with coordinate descent.

from hadamard_rect import Rect, TheoremId, catalog_lookup, refine_argmin, scan_gap

f = catalog_lookup("uv")
rect = Rect(0.0, 2.0, 0.0, 1.0)
s = 1.0

gap = scan_gap(TheoremId.T1, f, rect, s, grid_n=8)
nx, ny = gap.grid_shape

print(f"margin = rhs - lhs for {f.name} on a {nx}x{ny} lattice, s = {s}")
print()
# crude heat map, one character per cell, darkest where the bound is tight
lo = gap.grid[:, 4].min()
hi = gap.grid[:, 4].max()
shades = " .:-=+*#"
for iy in reversed(range(ny)):
    row = gap.grid[iy * nx:(iy + 1) * nx, 4]
    line = "".join(shades[min(int((m - lo) / (hi - lo + 1e-30) * len(shades)),
                              len(shades) - 1)] for m in row)
    print("   ", line)
print()
print(f"min margin {gap.min_margin:.3e} at ({gap.argmin[0]:.4f}, {gap.argmin[1]:.4f})")

ref = refine_argmin(TheoremId.T1, f, rect, s, gap.argmin)
print(f"refined: margin {ref.margin:.3e} at ({ref.x:.6f}, {ref.y:.6f}) "
      f"after {ref.iterations} iterations")
print("the corners are the equality cases for the bilinear surface at s = 1")
