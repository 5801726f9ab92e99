"""
Tau functions as generating series
==================================

The diagonal Schur expansion of a hypergeometric tau function, rewritten in
power sums, reproduces the Hurwitz table coefficient by coefficient.
"""

from whurwitz import weightgen as wg
from whurwitz.tau import mkp_block, schur_reexpansion, toda_block

G = wg.exp()
block = toda_block(G, 3, 3)  # raises if the block disagrees with the Hurwitz table

for lam, r in block.schur_coeffs.items():
    print("r_%s =" % (lam,), list(r))

# going back to the Schur basis gives a diagonal matrix at every degree
print(schur_reexpansion(block, 2))

# the one-sided (mKP) piece is r_lam / h_lam
for lam, series in mkp_block(wg.E(), 3, 2).items():
    print(lam, list(series))
