"""Irreducible characters of S_n by the Murnaghan-Nakayama rule, and the
change of basis between cycle sums C_mu and orthogonal idempotents F_lam.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import config
from .center import CYCLE_SUM, IDEMPOTENT, CenterElement
from .errors import WeightMismatch
from .partitions import all_partitions, hook_product, z_order


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    top = len(lam)
    beta = [p + top - 1 - i for i, p in enumerate(lam)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        # height of the removed rim hook = beads jumped over
        sign = -1 if sum(1 for x in beads if target < x < b) % 2 else 1
        new_beta = sorted((target if x == b else x for x in beta), reverse=True)
        new_lam = tuple(x - (top - 1 - i) for i, x in enumerate(new_beta))
        total += sign * _mn(tuple(p for p in new_lam if p > 0), rest)
    return total


def character(lam, mu):
    """chi_lam(mu) as an exact rational (always an integer)."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    return Fraction(_mn(lam, mu))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple
    chi: np.ndarray  # object array of Fractions, rows lam, columns mu

    def index(self, lam):
        return self.partitions.index(tuple(lam))

    def __call__(self, lam, mu):
        return self.chi[self.index(lam), self.index(mu)]

    def to_json(self):
        return {
            "n": self.n,
            "partitions": [list(p) for p in self.partitions],
            "chi": [[int(v) for v in row] for row in self.chi],
        }


@lru_cache(maxsize=None)
def _table(n):
    parts = tuple(all_partitions(n))
    chi = np.empty((len(parts), len(parts)), dtype=object)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            chi[i, j] = character(lam, mu)
    chi.flags.writeable = False
    return CharacterTable(n, parts, chi)


def table(n, cap=None):
    cap = config.CHARACTER_CAP if cap is None else cap
    if n < 1:
        raise ValueError("character tables need n >= 1")
    config.check_cap("n", n, cap)
    return _table(n)


def idempotent_from_cycles(lam):
    """F_lam expanded in the cycle-sum basis: h_lam^-1 sum_mu chi_lam(mu) C_mu."""
    lam = tuple(lam)
    n = sum(lam)
    h = hook_product(lam)
    return CenterElement(n, CYCLE_SUM, {mu: character(lam, mu) / h for mu in all_partitions(n)})


def cycles_from_idempotents(mu):
    """C_mu expanded in the idempotent basis: z_mu^-1 sum_lam h_lam chi_lam(mu) F_lam."""
    mu = tuple(mu)
    n = sum(mu)
    z = z_order(mu)
    return CenterElement(
        n, IDEMPOTENT, {lam: hook_product(lam) * character(lam, mu) / z for lam in all_partitions(n)}
    )


def to_idempotent_basis(x):
    if x.basis == IDEMPOTENT:
        return x
    out = CenterElement(x.n, IDEMPOTENT)
    for mu, c in x.coeffs.items():
        out = out + cycles_from_idempotents(mu).scale(c)
    return out


def to_cycle_basis(x):
    if x.basis == CYCLE_SUM:
        return x
    out = CenterElement(x.n, CYCLE_SUM)
    for lam, c in x.coeffs.items():
        out = out + idempotent_from_cycles(lam).scale(c)
    return out
