#!/usr/bin/env python3
"""Hodge diamonds and deformations of linear sections of Gr(2, n).

The headline pair: the 11-dimensional section of Gr(2, 10) carries the
middle-degree Hodge numbers 1, 101, 101, 1 of a quintic threefold, and
both have 101 first-order deformations.
"""

from grpf import ModelParams, classify, h1_tangent_y1, hodge_diamond_y1
from grpf.pfaffian import hypersurface_hodge

params = ModelParams(10, 5)
info = classify(params)
print(f"(n, k) = (10, 5): section of Gr(2,10) has dimension {info.dim_y1}",
      f"and is {info.y1_type.value}")
print(f"the dual degeneracy locus has dimension {info.dim_y2}",
      f"and is {info.y2_type.value}")

res = hodge_diamond_y1(params)
print("\nmiddle row of the elevenfold:", res.diamond.middle_row())
print("h^{1,1} =", res.diamond.h[(1, 1)])

quintic = hypersurface_hodge(4, 5)
print("\nquintic threefold diamond:")
print(quintic)
print("its middle row:", quintic.middle_row(), "- the same 1 101 101 1")

tan = h1_tangent_y1(params)
print(f"\nfirst-order deformations of the elevenfold: {tan.h1} ({tan.mode})")
print(f"deformations of the quintic: {quintic.h[(2, 1)]} = h^(2,1)")

# The k = n = 7 pair: two Calabi-Yau threefolds with matching invariants.
print("\n== the (7, 7) Calabi-Yau pair ==")
res77 = hodge_diamond_y1(ModelParams(7, 7))
print("diamond of the Gr(2,7) section:")
print(res77.diamond)
tan77 = h1_tangent_y1(ModelParams(7, 7))
print(f"h^1(T) = {tan77.h1} ({tan77.mode}), equal to h^(1,2) =",
      res77.diamond.h[(1, 2)])

# A sanity anchor with a classical answer: one hyperplane cut of Gr(2, 4)
# is the three-dimensional quadric, whose diamond is purely diagonal.
print("\n== quadric threefold check ==")
print(hodge_diamond_y1(ModelParams(4, 1)).diamond)
