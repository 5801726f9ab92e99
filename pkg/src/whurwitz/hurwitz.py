"""Classical and weighted double Hurwitz numbers by three independent routes.

* character route: coefficients of sum_lam r_lam^G(z) chi_lam(mu) chi_lam(nu) / (z_mu z_nu)
* path route: signature-weighted transposition paths in the Cayley graph
* geometric route: weighted sums of Frobenius-Schur numbers over extra
  branch-point configurations

The character route is the reference; the other two are verifiers.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

import numpy as np

from . import config, weightgen
from .characters import character, table
from .errors import InterpolationError, ParameterError, UnsupportedPreset, WeightMismatch
from .group_algebra import path_count_total
from .partitions import (all_partitions, aut_order, colength, hook_product,
                         is_identity_class, z_order)
from .symmetric import forgotten, monomial
from .weightgen import WeightGenerator, content_product_series, macdonald, taylor_coeffs

ROUTES = ("character", "paths", "geometric")


def _same_weight(*parts):
    n = sum(parts[0])
    if any(sum(p) != n for p in parts):
        raise WeightMismatch("all partitions must have the same weight")
    return n


def genus(mu, nu, d):
    """Genus from 2 - 2g = l(mu) + l(nu) - d, or None if not a nonnegative integer."""
    twice = 2 - len(mu) - len(nu) + d
    if twice < 0 or twice % 2:
        return None
    return twice // 2


# -- classical ----------------------------------------------------------------


def hurwitz_classical(profiles):
    """Frobenius-Schur formula sum_lam h_lam^(k-2) prod_i chi_lam(mu_i) / z_mu_i."""
    profiles = [tuple(p) for p in profiles]
    n = _same_weight(*profiles)
    k = len(profiles)
    zs = prod((z_order(p) for p in profiles), start=Fraction(1))
    total = Fraction(0)
    for lam in all_partitions(n):
        term = hook_product(lam) ** (k - 2)
        for p in profiles:
            term *= character(lam, p)
            if not term:
                break
        total += term
    return total / zs


# -- character route ----------------------------------------------------------


def weighted_H_character(G, mu, nu, D):
    """[H^0, ..., H^D] for the pair (mu, nu), read off the content-product series."""
    mu, nu = tuple(mu), tuple(nu)
    n = _same_weight(mu, nu)
    table(n)  # enforces the character cap
    out = [Fraction(0)] * (D + 1)
    for lam in all_partitions(n):
        w = character(lam, mu) * character(lam, nu)
        if not w:
            continue
        r = content_product_series(G, lam, D)
        for d in range(D + 1):
            out[d] += w * r[d]
    norm = z_order(mu) * z_order(nu)
    return [v / norm for v in out]


# -- path route ---------------------------------------------------------------


def signature_weight(G, lam):
    """G_lam = prod_i G_{lam_i}: the path weight for signature ``lam``."""
    g = taylor_coeffs(G, max(lam, default=0))
    return prod((g[p] for p in lam), start=Fraction(1))


def weighted_F_paths(G, mu, nu, d, cap=None, degree_cap=None):
    """(1/n!) sum_{|lam|=d} G_lam m^lam_{mu nu}, with
    m^lam = (prod lam_i! / d!) * (all signature-lam paths from cyc(mu) to cyc(nu))."""
    mu, nu = tuple(mu), tuple(nu)
    n = _same_weight(mu, nu)
    total = Fraction(0)
    for lam in all_partitions(d):
        weight = signature_weight(G, lam)
        if not weight:
            continue
        count = path_count_total(mu, nu, lam, cap, degree_cap)
        if count:
            total += weight * Fraction(prod(factorial(p) for p in lam), factorial(d)) * count
    return total / factorial(n)


# -- geometric route ----------------------------------------------------------


def _q_geometric_weight(lam, q, start, dual):
    """Closed forms of m_lam / f_lam at c = (q^start, q^(start+1), ...).

    Symmetrized over orderings sigma of the colengths; H_j are the head sums
    a_sigma(1) + ... + a_sigma(j).
    """
    k = len(lam)
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for order in permutations(lam):
        heads = [sum(order[: j + 1]) for j in range(k)]
        den = prod((1 - q**h for h in heads), start=Fraction(1))
        if dual:
            num = q ** (start * heads[-1])
        else:
            # strict chain start <= i_k < ... < i_1 in head-sum form
            num = q ** (start * heads[-1] + sum(heads[:-1]))
        total += num / den
    sign = (-1) ** colength(lam) if dual else 1
    return sign * total / aut_order(lam)


def _finite_parameters(G):
    if G.preset == "classical":
        return G.params[0], G.dualized
    if G.preset == "E":
        return (Fraction(1),), G.dualized
    if G.preset == "Ek":
        return (Fraction(1),) * G.params[0], G.dualized
    if G.preset == "H":
        return (Fraction(1),), not G.dualized
    return None


@lru_cache(maxsize=None)
def configuration_weight(G, lam):
    """Weight of a branch-point configuration whose colengths form ``lam``.

    m_lam(c) for a generator prod(1 + c_i z), f_lam(c) for a dual generator,
    in the normalization where each unordered configuration is counted once
    per ordering compatible with decreasing colengths.
    """
    lam = tuple(lam)
    finite = _finite_parameters(G)
    if finite is not None:
        c, dual = finite
        return forgotten(lam, c) if dual else monomial(lam, c)
    if G.preset == "exp":
        # limit of (1 + z/m)^m: only simple branch points survive
        return Fraction(1, factorial(len(lam))) if all(p == 1 for p in lam) else Fraction(0)
    if G.preset in ("Eprime", "Eq", "Hq"):
        q = G.params[0]
        start = 1 if G.preset == "Eprime" else 0
        dual = (G.preset == "Hq") != G.dualized
        return _q_geometric_weight(lam, q, start, dual)
    raise UnsupportedPreset(f"no geometric weight form for preset {G.name}")


@lru_cache(maxsize=None)
def _nontrivial_profiles(n):
    return tuple(p for p in all_partitions(n) if not is_identity_class(p))


def configurations(n, d):
    """Multisets of nontrivial profiles of n with total colength d (sorted tuples)."""
    profiles = _nontrivial_profiles(n)

    def rec(start, remaining):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(profiles)):
            c = colength(profiles[i])
            if c <= remaining:
                for rest in rec(i, remaining - c):
                    yield (profiles[i],) + rest

    return list(rec(0, d))


def ordering_count(config_):
    """Orderings of a multiset of profiles that keep colengths weakly decreasing."""
    by_colength = Counter(colength(p) for p in config_)
    return Fraction(
        prod(factorial(k) for k in by_colength.values()),
        prod(factorial(m) for m in Counter(config_).values()),
    )


def weighted_H_geometric(G, mu, nu, d):
    """Sum over configurations of weight * multiplicity * H(config, mu, nu)."""
    mu, nu = tuple(mu), tuple(nu)
    n = _same_weight(mu, nu)
    table(n)
    total = Fraction(0)
    for conf in configurations(n, d):
        lam = tuple(sorted((colength(p) for p in conf), reverse=True))
        w = configuration_weight(G, lam)
        if w:
            total += ordering_count(conf) * w * hurwitz_classical(list(conf) + [mu, nu])
    return total


# -- tables -------------------------------------------------------------------


@dataclass
class HurwitzTable:
    n: int
    generator: str
    degree: int
    route: str
    values: dict = field(default_factory=dict)  # (d, mu, nu) -> Fraction

    def rows(self):
        for (d, mu, nu), v in sorted(self.values.items(), key=_row_key):
            yield {"d": d, "mu": list(mu), "nu": list(nu), "value": v, "genus": genus(mu, nu, d)}


def _row_key(item):
    (d, mu, nu), _ = item
    order = {p: i for i, p in enumerate(all_partitions(sum(mu)))}
    return d, order[mu], order[nu]


def hurwitz_table(G, n, D, route="character"):
    parts = all_partitions(n)
    tab = HurwitzTable(n, G.name, D, route)
    for mu in parts:
        for nu in parts:
            if route == "character":
                vals = weighted_H_character(G, mu, nu, D)
            elif route == "paths":
                config.check_cap("d", D, config.PATH_DEGREE_CAP)
                vals = [weighted_F_paths(G, mu, nu, d) for d in range(D + 1)]
            elif route == "geometric":
                vals = [weighted_H_geometric(G, mu, nu, d) for d in range(D + 1)]
            else:
                raise ParameterError(f"unknown route {route!r}")
            for d, v in enumerate(vals):
                tab.values[(d, mu, nu)] = v
    return tab


# -- multispecies -------------------------------------------------------------


def _class_action_matrix(G, d, n):
    """Matrix of G-coefficient d acting on C_mu: entry (mu, nu) = z_nu H^d_G(mu, nu)."""
    parts = all_partitions(n)
    m = np.empty((len(parts), len(parts)), dtype=object)
    for i, mu in enumerate(parts):
        for j, nu in enumerate(parts):
            m[i, j] = z_order(nu) * weighted_H_character(G, mu, nu, d)[d]
    return m


def multispecies_F(factors, n):
    """Multispecies numbers for a list of (generator, degree) factors.

    Returns the matrix over canonical partition order whose (mu, nu) entry
    is the coefficient of prod_i w_i^{d_i}; each species contributes its
    own commuting central element.
    """
    parts = all_partitions(n)
    out = np.empty((len(parts), len(parts)), dtype=object)
    out[:] = Fraction(0)
    np.fill_diagonal(out, Fraction(1))
    for G, d in factors:
        out = out.dot(_class_action_matrix(G, d, n))
    zs = np.array([z_order(nu) for nu in parts], dtype=object)
    return out / zs[np.newaxis, :]


def hybrid_F(c, d, n):
    """Coefficient of w^c z^d for Q(w, z) = (1 + w)/(1 - z): an E factor in w
    times a dual-E factor in z."""
    return multispecies_F([(weightgen.E(), c), (weightgen.E().dual(), d)], n)


# -- Macdonald polynomiality in t ---------------------------------------------


def newton_interpolate(xs, ys):
    """Coefficients (ascending powers) of the interpolating polynomial."""
    xs = [Fraction(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise InterpolationError("interpolation nodes must be distinct")
    coef = [Fraction(y) for y in ys]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return poly


def _poly_eval(coeffs, x):
    return sum((c * x**i for i, c in enumerate(coeffs)), Fraction(0))


def macdonald_decompose(q, t_samples, c, mu, nu, d):
    """Coefficients H^(d,e), e = 0..d, of F^d_M(q,t,c)(mu, nu) as a polynomial in t.

    Needs at least d + 1 distinct samples; any further samples must lie on the
    interpolant exactly, otherwise :class:`InterpolationError` is raised.
    """
    if t_samples is None:
        t_samples = [Fraction(k, 1) for k in range(d + 3)]
    ts = [Fraction(t) for t in t_samples]
    if len(set(ts)) != len(ts):
        raise InterpolationError("coincident t samples")
    if len(ts) < d + 1:
        raise InterpolationError(f"need at least {d + 1} t samples, got {len(ts)}")
    values = [weighted_H_character(macdonald(q, t, c), mu, nu, d)[d] for t in ts]
    coeffs = newton_interpolate(ts[: d + 1], values[: d + 1])
    for t, v in zip(ts[d + 1:], values[d + 1:]):
        if _poly_eval(coeffs, t) != v:
            raise InterpolationError(f"value at t={t} is off the degree-{d} interpolant")
    return coeffs
