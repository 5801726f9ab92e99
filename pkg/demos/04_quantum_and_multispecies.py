"""
Quantum weights and several species of branch points
====================================================

The Macdonald family interpolates between the elementary and complete
quantum cases; its numbers are polynomials in t.  Products of commuting
central elements give multispecies numbers.
"""

from fractions import Fraction

import numpy as np

from whurwitz import weightgen as wg
from whurwitz.hurwitz import hybrid_F, macdonald_decompose, multispecies_F

q = Fraction(1, 3)
for d in range(4):
    coeffs = macdonald_decompose(q, None, [1], (3,), (3,), d)
    print("d =", d, "coefficients in t:", coeffs)

# Macdonald with t = q is the dual classical weighting
left = wg.taylor_coeffs(wg.macdonald(q, q, [1, 2]), 4)
right = wg.taylor_coeffs(wg.classical([1, 2]).dual(), 4)
print(left == right)

# the hybrid (1 + w)/(1 - z) weighting at w^1 z^2
print(hybrid_F(1, 2, 3))

# the order of the factors does not matter
factors = [(wg.E(), 1), (wg.exp(), 2)]
print(np.array_equal(multispecies_F(factors, 3), multispecies_F(factors[::-1], 3)))
