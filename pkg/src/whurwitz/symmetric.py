"""Evaluate classical symmetric functions at a finite list of values.

These back the geometric branch-point weights (monomial and forgotten
functions) and serve as eigenvalue oracles on content multisets.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations
from math import prod

from .partitions import aut_order, colength


def power_sum(k, xs):
    return sum((Fraction(x) ** k for x in xs), Fraction(0))


def elementary(k, xs):
    if k < 0:
        return Fraction(0)
    return sum((prod((Fraction(x) for x in c), start=Fraction(1)) for c in combinations(xs, k)),
               Fraction(0))


def complete(k, xs):
    if k < 0:
        return Fraction(0)
    return sum((prod((Fraction(x) for x in c), start=Fraction(1))
                for c in combinations_with_replacement(xs, k)), Fraction(0))


def elementary_product(lam, xs):
    return prod((elementary(p, xs) for p in lam), start=Fraction(1))


def complete_product(lam, xs):
    return prod((complete(p, xs) for p in lam), start=Fraction(1))


def monomial(lam, xs):
    """m_lam(xs): sum over injective index maps, divided by |aut(lam)|."""
    xs = [Fraction(x) for x in xs]
    k = len(lam)
    if k > len(xs):
        return Fraction(0)
    total = sum((prod((xs[i] ** p for i, p in zip(idx, lam)), start=Fraction(1))
                 for idx in permutations(range(len(xs)), k)), Fraction(0))
    return total / aut_order(lam)


def forgotten(lam, xs):
    """f_lam(xs) = (-1)^colength / |aut| * sum_sigma sum_{i_1<=...<=i_k} prod x^lam.

    Equals the image of m_lam under the involution exchanging e and h.
    """
    xs = [Fraction(x) for x in xs]
    k = len(lam)
    total = Fraction(0)
    for idx in combinations_with_replacement(range(len(xs)), k):
        for sigma in permutations(range(k)):
            total += prod((xs[idx[sigma[j]]] ** lam[j] for j in range(k)), start=Fraction(1))
    return (-1) ** colength(lam) * total / aut_order(lam)
