"""
Six kinds of quadric
====================

Zero sets in PG(3, 4) and how the classifier tells them apart.
"""

from hermcode import QuadraticForm, make_field
from hermcode.projgeom import PG3
from hermcode.quadric import classify, singular_points, zero_set

F = make_field(2, 2)
pg = PG3(F)
w = F.generator

examples = {
    "x0^2": {(0, 0): 1},
    "x0 x1": {(0, 1): 1},
    "x0^2 + x0 x1 + w x1^2": {(0, 0): 1, (0, 1): 1, (1, 1): w},
    "x0 x1 + x2^2": {(0, 1): 1, (2, 2): 1},
    "x0 x1 + x2 x3": {(0, 1): 1, (2, 3): 1},
    "x0^2 + x0 x1 + w x1^2 + x2 x3": {(0, 0): 1, (0, 1): 1, (1, 1): w, (2, 3): 1},
}
for name, terms in examples.items():
    f = QuadraticForm.from_terms(F, terms)
    cls = classify(f, pg)
    sing = singular_points(f, pg)
    print(f"{name:32s} {cls.label:14s} rank {cls.rank}  |Z| = {len(zero_set(f, pg)):3d}"
          f"  singular points: {len(sing)}")
