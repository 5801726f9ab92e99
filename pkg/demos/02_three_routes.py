"""
Weighted double Hurwitz numbers three ways
==========================================

The same numbers come from content products of characters, from weighted
walks in the Cayley graph of transpositions, and from summing over
configurations of extra branch points.
"""

from fractions import Fraction

from whurwitz import weightgen as wg
from whurwitz.hurwitz import hurwitz_table

G = wg.eprime(Fraction(1, 3))
n, D = 3, 3

tables = {route: hurwitz_table(G, n, D, route) for route in ("character", "paths", "geometric")}
for row in tables["character"].rows():
    if row["value"]:
        print(row["d"], row["mu"], row["nu"], row["value"], "genus", row["genus"])

print("routes agree:", tables["character"].values == tables["paths"].values
      == tables["geometric"].values)

# monotone paths: the complete (dual) generator counts weakly monotone walks
H = wg.H()
walks = hurwitz_table(H, 4, 3, "paths")
print("weakly monotone, (1^4) -> (4):", walks.values[(3, (1, 1, 1, 1), (4,))])
