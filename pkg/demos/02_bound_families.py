#!/usr/bin/env python3
# Compare the three upper-bound families at one point, then sweep s.

from hadamard_rect import (EvalPoint, Rect, TheoremId, catalog_lookup,
                           compare_families, sweep_s)

f = catalog_lookup("u2v2")
rect = Rect(0.0, 2.0, 0.0, 1.0)
pt = EvalPoint(0.5, 0.25)
s, q = 0.5, 2.0

print(f"families at ({pt.x}, {pt.y}), s={s}, q={q}, surface {f.name}")
for r in compare_families(f, rect, pt, s, q):
    constant = r.params.get("constant")
    label = r.theorem_id.value + (f"[{constant}]" if constant else "")
    print(f"  {label:15s} lhs={r.lhs:.10f}  rhs={r.rhs:.10f}  margin={r.margin:.10f}")

print()
print("same surface, first-power family, s from 0.1 to 1:")
res = sweep_s(TheoremId.T1, f, rect, pt, [k / 10 for k in range(1, 11)])
for r in res.reports:
    bar = "#" * int(round(60 * r.rhs / res.reports[0].rhs))
    print(f"  s={r.params['s']:<4} rhs={r.rhs:.6f} {bar}")
print("rhs trend:", res.rhs_trend)
