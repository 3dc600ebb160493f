"""
Quadrics near the top, t = 3
============================

The tangent-plane pairs give the minimum weight; three other shapes give
the next one.
"""

from hermcode import build_surface
from hermcode.analysis import construct_min_weight, construct_second_weight_witness, intersection_size

X = build_surface(3)
p1 = int(X.points[0])
h1 = X.tangent_plane(p1)
p2 = int(next(p for p in X.points if not X.pg.incidence[h1.index, p]))
f = construct_min_weight(X, p1, p2)
print("tangent pair:", f, "meets X in", intersection_size(f, X), "points")

for kind in "ABC":
    w = construct_second_weight_witness(X, kind)
    print(f"kind {kind}: |X ∩ Q| = {w.size}, weight {w.weight}, {w.details['scenario']}")

b = construct_second_weight_witness(X, "B").details
print("regulus quadric:", b["x_lines"], "lines of X,", b["double_points"], "double points,",
      b["simple_points"], "simple points")
