#!/usr/bin/env python3
# The five-term chain of means. For f = u^s v^s the last three terms agree
# exactly, which makes a good stress test for the adaptive quadrature: the
# boundary sections have endpoint singularities in their derivatives.

import sys

from hadamard_rect import Rect, chain_evaluate, parse_surface

s = float(sys.argv[1]) if len(sys.argv) > 1 else 0.5

rect = Rect(0.0, 1.0, 0.0, 1.0)
f = parse_surface(f"u^{s}*v^{s}")
ev = chain_evaluate(f, rect, s)

labels = ("scaled midpoint value", "scaled mid-section means", "area mean",
          "edge-mean combination", "scaled corner sum")
print(f"chain for {f.name} on the unit square, s = {s}")
for i, (label, value) in enumerate(zip(labels, ev.values)):
    print(f"  e{i}  {label:26s} {value:.12f}")
print("monotone:", ev.monotone)
print(f"e2..e4 spread: {max(ev.values[2:]) - min(ev.values[2:]):.2e}")
