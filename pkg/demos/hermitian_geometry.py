"""
The Hermitian surface in PG(3, 4)
=================================

x0^3 + x1^3 + x2^3 + x3^3 = 0 over GF(4): 45 points, 27 lines.
"""

from hermcode import build_surface

X = build_surface(2)
pg = X.pg
print(X, "inside", pg, "with", pg.n_points, "points and", pg.n_lines, "lines")

# a point and its tangent plane
w = X.field.generator
p = pg.index_of((1, w, 0, 0))
h = X.tangent_plane(p)
print("tangent plane at", pg.format_point(p), "is", h)

# the tangent section is t+1 lines through the point of contact
centre, lines = X.decompose_tangent_section(h)
for line in lines:
    print("  generator:", [pg.format_point(q) for q in line.points])

# every point sees the same mix of lines
print(X.format_line_census(X.points[:5]))
print("generators on X:", len(X.all_generators()))
