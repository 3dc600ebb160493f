"""
Arithmetic in GF(t^2)
=====================

Elements are integer codes; the tables behind them are plain numpy arrays.
"""

import numpy as np

from hermcode import make_field

# GF(9): modulus x^2 + 1, the smallest monic irreducible quadratic over GF(3)
F = make_field(3, 2)
print("modulus coefficients (low degree first):", F.modulus)
print("primitive element:", F.generator)

# the whole multiplication table at once
print(F.mul_table)

# conjugation is x -> x^3 and the norm x^4 lands in the prime field
x = F.element(5)
print("x =", x, " conj =", x.conjugate(), " norm =", F.norm(5))
print("norm values:", np.unique(F.norm_table))
