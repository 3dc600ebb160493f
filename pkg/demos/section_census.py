"""
How many points can a quadric share with X?
===========================================

Every quadric in PG(3, 4), sorted by how it sits against the surface.
"""

from hermcode import build_surface, quadric_census

X = build_surface(2)
report = quadric_census(X, "exhaustive")
d = report.to_dict()
print("largest intersection:", d["max"], "reached by", d["max_attained_by"])
print("next largest:", d["second_max"], "reached by", d["s2_attained_by"])
for label, row in d["per_label"].items():
    print(f"{label:32s} {row['count']:7d} forms, sizes {row['min']}..{row['max']}")
print(d["verdicts"])
