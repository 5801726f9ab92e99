"""Finite coefficient blocks of hypergeometric 2D Toda and mKP tau-functions.

The weight-n block of tau^G(t, s) = sum_lam r_lam^G(z) s_lam(t) s_lam(s) is
stored both in the double Schur basis (diagonal, the content products) and
in the double power-sum basis p_mu(t) p_nu(s).  Flow parameters are never
evaluated; only coefficients are represented.  Charge is fixed at N = 0.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import table
from .errors import RouteMismatch
from .hurwitz import weighted_H_character
from .partitions import all_partitions, hook_product, identity_class, z_order
from .weightgen import content_product_series


@dataclass(frozen=True)
class TauTable:
    n: int
    degree: int
    schur_coeffs: dict  # lam -> TruncatedSeries
    powersum_coeffs: dict  # (d, mu, nu) -> Fraction


def _schur_to_powersum(n):
    """X[lam, mu] = chi_lam(mu) / z_mu, so that s_lam = sum_mu X[lam, mu] p_mu."""
    tab = table(n)
    zs = np.array([z_order(mu) for mu in tab.partitions], dtype=object)
    return tab.chi / zs[np.newaxis, :]


def toda_block(G, n, D, check=True):
    parts = all_partitions(n)
    schur = {lam: content_product_series(G, lam, D) for lam in parts}
    X = _schur_to_powersum(n)
    powersum = {}
    for d in range(D + 1):
        R = np.diag(np.array([schur[lam][d] for lam in parts], dtype=object))
        P = X.T.dot(R).dot(X)
        for i, mu in enumerate(parts):
            for j, nu in enumerate(parts):
                powersum[(d, mu, nu)] = Fraction(P[i, j])
    block = TauTable(n, D, schur, powersum)
    if check:
        for mu in parts:
            for nu in parts:
                ref = weighted_H_character(G, mu, nu, D)
                for d in range(D + 1):
                    if ref[d] != powersum[(d, mu, nu)]:
                        raise RouteMismatch(
                            f"tau block differs from Hurwitz table at d={d}, mu={mu}, nu={nu}")
    return block


def powersum_matrix(block, d):
    parts = all_partitions(block.n)
    return np.array([[block.powersum_coeffs[(d, mu, nu)] for nu in parts] for mu in parts],
                    dtype=object)


def schur_reexpansion(block, d):
    """Degree-d double Schur coefficient matrix recovered from the power-sum block.

    Uses p_mu = sum_lam chi_lam(mu) s_lam on both sides.
    """
    chi = table(block.n).chi
    return chi.dot(powersum_matrix(block, d)).dot(chi.T)


def mkp_block(G, n, D):
    """r_lam^G(z) / h_lam: the one-sided tau-function coefficients in s_lam(t)."""
    return {lam: content_product_series(G, lam, D) * (1 / hook_product(lam))
            for lam in all_partitions(n)}


def mkp_powersum(G, n, D):
    """Power-sum coefficients (d, mu) of the weight-n mKP block."""
    parts = all_partitions(n)
    mkp = mkp_block(G, n, D)
    X = _schur_to_powersum(n)
    out = {}
    for d in range(D + 1):
        row = np.array([mkp[lam][d] for lam in parts], dtype=object).dot(X)
        for j, mu in enumerate(parts):
            out[(d, mu)] = Fraction(row[j])
    return out


def special_point_column(block):
    """Power-sum block at s = (1, 0, 0, ...), where p_nu(s) = [nu = (1^n)]."""
    one = identity_class(block.n)
    return {(d, mu): v for (d, mu, nu), v in block.powersum_coeffs.items() if nu == one}
