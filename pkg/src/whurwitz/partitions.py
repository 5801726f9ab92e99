"""Integer partitions and their elementary statistics.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Every function here is pure.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod


def partition(parts):
    """Validate ``parts`` and return it as a canonical partition tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def all_partitions(n):
    """All partitions of ``n`` in reverse lexicographic order.

    >>> all_partitions(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def weight(lam):
    return sum(lam)


def length(lam):
    return len(lam)


def colength(lam):
    """|lam| - l(lam), the Riemann-Hurwitz defect of a profile."""
    return sum(lam) - len(lam)


def multiplicities(lam):
    return Counter(lam)


def z_order(mu):
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    return Fraction(prod(i**m * factorial(m) for i, m in Counter(mu).items()))


def aut_order(lam):
    return Fraction(prod(factorial(m) for m in Counter(lam).values()))


def class_size(mu):
    """Number of permutations with cycle type ``mu``."""
    return Fraction(factorial(sum(mu))) / z_order(mu)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def cells(lam):
    """Cells ``(i, j)`` of the Young diagram, English convention, 1-based."""
    return [(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def contents(lam):
    return [j - i for i, j in cells(lam)]


def hook_product(lam):
    lam_c = conjugate(lam)
    return Fraction(prod(
        (lam[i - 1] - j) + (lam_c[j - 1] - i) + 1 for i, j in cells(lam)
    ))


def dimension(lam):
    """Dimension of the irreducible S_n representation of type ``lam``."""
    return Fraction(factorial(sum(lam))) / hook_product(lam)


def is_identity_class(mu):
    return all(p == 1 for p in mu)


def identity_class(n):
    return (1,) * n


def to_json(lam):
    return list(lam)
