"""
Characters and classical Hurwitz numbers
========================================

Counting branched covers of the sphere by counting factorizations of the
identity in S_n, and checking the count against the character formula.
"""

from fractions import Fraction

from whurwitz.characters import table
from whurwitz.group_algebra import frobenius_count
from whurwitz.hurwitz import hurwitz_classical

# the character table of S_4; rows and columns follow reverse-lex partition order
tab = table(4)
print(tab.partitions)
print(tab.chi)

# three-point covers of degree 3: two simple branch points and a full cycle
profiles = [(2, 1), (2, 1), (3,)]
print("brute force:", frobenius_count(profiles))
print("characters: ", hurwitz_classical(profiles))

# a double-transposition cover in degree 4 needs more branch points
for k in range(2, 6):
    value = hurwitz_classical([(2, 1, 1)] * k)
    print(k, "simple branch points:", value)

# one over the automorphism count comes out as a rational, never a float
assert isinstance(hurwitz_classical([(2, 2), (2, 2)]), Fraction)
