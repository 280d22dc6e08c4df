#!/usr/bin/env python3
# The bound families assume |d2f/dudv| is s-convex on coordinate sections.
# That hypothesis is checked by randomized sampling: a found counterexample
# is a hard fact, an empty search is only evidence.

import numpy as np

from hadamard_rect import (Rect, SamplerConfig, catalog_lookup,
                           certify_coordinated, parse_surface, replay_witness)

rect = Rect(0.0, 1.0, 0.0, 1.0)
cfg = SamplerConfig(seed=20260816)

good = catalog_lookup("u2v2")
rep = certify_coordinated(lambda u, v: abs(good.mixed_partial(u, v)), rect, 0.5, cfg)
print(f"{good.name}: {rep.verdict.value} after {rep.samples_used} samples")

# sqrt-shaped mixed partial: concave sections, so 1-convexity must fail
bad = parse_surface("u^1.5*v^1.5")
rep = certify_coordinated(lambda u, v: abs(bad.mixed_partial(u, v)), rect, 1.0, cfg)
print(f"{bad.name}: {rep.verdict.value} after {rep.samples_used} samples")

w = rep.witness
print(f"  witness on section {w.section}: x1={w.x1:.6f} x2={w.x2:.6f} lam={w.lam:.4f}")
print(f"  lhs={w.lhs:.6f} > rhs={w.rhs:.6f} (slack {w.slack:.2e}, kind {w.kind})")

# anyone can replay the witness against the section directly;
# the tag names the axis that is held fixed
axis, c0 = w.section
if axis == "v":
    g = lambda t: abs(bad.mixed_partial(t, c0))
else:
    g = lambda t: abs(bad.mixed_partial(c0, t))
print(f"  replayed slack: {replay_witness(g, 1.0, w):.2e}")
