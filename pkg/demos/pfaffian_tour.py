#!/usr/bin/env python3
"""Families of skew 2-forms: exact Pfaffians and finite-field sampling.

A random 5-dimensional family of 2-forms on a 10-dimensional space cuts
a quintic threefold out of projective 4-space; its points over F_p have
2-dimensional kernels and the Jacobian criterion certifies smoothness.
"""

from grpf import AMap, build_skew_matrix, pfaffian_polynomial, sample_y2
from grpf.pfaffian import submaximal_pfaffians

p = 10007

print("== the (10, 5) family ==")
am = AMap.random(10, 5, seed=42, p=p)
slm = build_skew_matrix(am)
pf = pfaffian_polynomial(slm)
print(f"symbolic Pfaffian: degree {pf.total_degree()}, {len(pf.terms)} monomials")

res = sample_y2(am, p, 200, seed=42)
kernels = sorted({q.kernel_dim for q in res.points})
print(f"sampled {len(res.points)} points over F_{p} in {res.attempts} lines;")
print(f"kernel dimensions {kernels}, smooth fraction {res.smooth_fraction:.3f}")

print("\n== the (7, 7) family: odd case ==")
am77 = AMap.random(7, 7, seed=42, p=p)
slm77 = build_skew_matrix(am77)
subs = submaximal_pfaffians(slm77)
print(f"{len(subs)} submaximal Pfaffians of degree {subs[0].total_degree()}",
      "cut the locus")
res77 = sample_y2(am77, p, 200, seed=42)
kernels = sorted({q.kernel_dim for q in res77.points})
print(f"sampled {len(res77.points)} points;",
      f"kernel dimensions {kernels}, smooth fraction {res77.smooth_fraction:.3f}")

print("\n== the (8, 4) family: a quartic surface ==")
am84 = AMap.random(8, 4, seed=42, p=p)
res84 = sample_y2(am84, p, 200, seed=42)
print(f"sampled {len(res84.points)} points, smooth fraction",
      f"{res84.smooth_fraction:.3f}")

# The families round-trip through their JSON format byte-exactly.
import json

blob = json.dumps(am.to_json_dict(), sort_keys=True)
again = AMap.from_json_dict(json.loads(blob))
print("\nJSON round trip preserves the family:",
      again.to_json_dict() == am.to_json_dict())
