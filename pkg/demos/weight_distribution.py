"""
Weights of the quadric code on X, t = 2
=======================================

All 349,525 projective classes of quadratic forms, evaluated at the 45
points of the surface.
"""

import time

from hermcode import build_generator_matrix, build_surface, weight_distribution

X = build_surface(2)
G = build_generator_matrix(X, 2)
print(f"n = {G.n}, k = {G.k}")

start = time.perf_counter()
dist = weight_distribution(G, "exhaustive")
print(f"swept in {time.perf_counter() - start:.2f}s")
for w, count in dist.counts.items():
    print(f"{w:3d} {count:7d}")

# linear forms instead: only two nonzero weights
print(weight_distribution(build_generator_matrix(X, 1)).counts)
