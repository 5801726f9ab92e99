"""The center of C[S_n] in the cycle-sum basis, Jucys-Murphy elements,
and brute-force enumeration oracles.

Permutations are tuples of images on {0, ..., n-1} (the point ``i`` stands
for ``i + 1``).  Products compose right to left: ``(g * h)(i) = g(h(i))``.
Explicit group-algebra elements are dicts ``permutation -> Fraction``.
"""

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial

from . import config
from .center import CYCLE_SUM, CenterElement
from .characters import to_cycle_basis, to_idempotent_basis
from .errors import WeightMismatch
from .partitions import all_partitions, class_size, colength

# -- permutations -------------------------------------------------------------


def compose(g, h):
    return tuple(g[i] for i in h)


def inverse(g):
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = i
    return tuple(out)


def identity(n):
    return tuple(range(n))


def transposition(n, a, b):
    """The transposition (a b) with 1-based points."""
    g = list(range(n))
    g[a - 1], g[b - 1] = b - 1, a - 1
    return tuple(g)


def cycle_type(g):
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        k, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = g[i]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def conjugacy_classes(n):
    classes = defaultdict(list)
    for g in permutations(range(n)):
        classes[cycle_type(g)].append(g)
    return {mu: tuple(classes[mu]) for mu in all_partitions(n)}


def signature(steps):
    """Signature of a sequence of transpositions ``(a, b)``, ``a < b``.

    Parts count how often each distinct second element occurs.
    """
    return tuple(sorted(Counter(b for _, b in steps).values(), reverse=True))


# -- explicit group algebra ---------------------------------------------------


def multiply(x, y):
    out = defaultdict(Fraction)
    for g, a in x.items():
        for h, b in y.items():
            out[compose(g, h)] += a * b
    return {g: v for g, v in out.items() if v}


def add(x, y, scale=1):
    out = defaultdict(Fraction, x)
    for g, v in y.items():
        out[g] += scale * v
    return {g: v for g, v in out.items() if v}


def expand(x):
    """Explicit group-algebra form of a central element."""
    x = to_cycle_basis(x)
    classes = conjugacy_classes(x.n)
    return {g: c for mu, c in x.coeffs.items() for g in classes[mu]}


def project(x, n):
    """Read a central explicit element back into the cycle-sum basis."""
    classes = conjugacy_classes(n)
    return CenterElement(n, CYCLE_SUM, {
        mu: x.get(members[0], Fraction(0)) for mu, members in classes.items()
    })


def convolve_classes(a, b):
    """Product of central elements by direct convolution of permutations."""
    if a.n != b.n:
        raise WeightMismatch("factors live in different S_n")
    return project(multiply(expand(a), expand(b)), a.n)


def class_multiply(a, b):
    """Product in Z(C[S_n]) computed through the idempotent basis."""
    if a.n != b.n:
        raise WeightMismatch("factors live in different S_n")
    fa, fb = to_idempotent_basis(a), to_idempotent_basis(b)
    prod_f = CenterElement(a.n, fa.basis, {lam: v * fb[lam] for lam, v in fa.coeffs.items()})
    return to_cycle_basis(prod_f)


# -- factorizations of the identity -------------------------------------------


def _count_from_prefix(args):
    firsts, rest_classes, last = args
    total = 0
    for g in firsts:
        for h in product(*rest_classes):
            acc = g
            for x in h:
                acc = compose(acc, x)
            if cycle_type(acc) == last:
                total += 1
    return total


def factorization_count(profiles, cap=None, workers=1):
    """Number of tuples (g_1, ..., g_k), g_i of type profiles[i], with g_1...g_k = 1."""
    profiles = [tuple(p) for p in profiles]
    if not profiles:
        return 1
    n = sum(profiles[0])
    if any(sum(p) != n for p in profiles):
        raise WeightMismatch("all profiles must have the same weight")
    config.check_cap("n", n, config.brute_force_cap() if cap is None else cap)
    classes = conjugacy_classes(n)
    if len(profiles) == 1:
        return 1 if all(p == 1 for p in profiles[0]) else 0
    # the last factor is forced to be the inverse of the running product
    firsts = classes[profiles[0]]
    rest = [classes[p] for p in profiles[1:-1]]
    last = profiles[-1]
    if workers <= 1:
        return _count_from_prefix((firsts, rest, last))
    chunks = [firsts[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        return sum(pool.map(_count_from_prefix, [(c, rest, last) for c in chunks]))


def frobenius_count(profiles, cap=None, workers=1):
    """Combinatorial Hurwitz number: factorization count divided by n!."""
    n = sum(profiles[0]) if profiles else 0
    return Fraction(factorization_count(profiles, cap, workers), factorial(n))


# -- paths in the Cayley graph ------------------------------------------------


@lru_cache(maxsize=None)
def _signature_totals(n, d, mu):
    """Map (nu, signature) -> number of d-step paths from all h in cyc(mu)."""
    steps = [(a, b) for b in range(1, n) for a in range(b)]
    layer = Counter({(h, (0,) * n): 1 for h in conjugacy_classes(n)[mu]})
    for _ in range(d):
        nxt = Counter()
        for (h, counts), mult in layer.items():
            for a, b in steps:
                g = list(h)
                # left multiplication by (a b) swaps the values a and b
                ia, ib = g.index(a), g.index(b)
                g[ia], g[ib] = b, a
                c = list(counts)
                c[b] += 1
                nxt[(tuple(g), tuple(c))] += mult
        layer = nxt
    out = Counter()
    for (g, counts), mult in layer.items():
        sig = tuple(sorted((c for c in counts if c), reverse=True))
        out[(cycle_type(g), sig)] += mult
    return dict(out)


def path_count_total(mu, nu, lam, cap=None, degree_cap=None):
    """Number of signature-``lam`` paths from any h in cyc(mu) ending in cyc(nu)."""
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    n = sum(mu)
    if sum(nu) != n:
        raise WeightMismatch("mu and nu must have the same weight")
    config.check_cap("n", n, config.brute_force_cap() if cap is None else cap)
    config.check_cap("d", sum(lam), config.PATH_DEGREE_CAP if degree_cap is None else degree_cap)
    return _signature_totals(n, sum(lam), mu).get((nu, lam), 0)


def count_paths_by_signature(mu, nu, lam, cap=None, degree_cap=None):
    """Class-averaged number of d-step transposition paths of signature ``lam``
    starting at h in cyc(mu) and ending in cyc(nu)."""
    total = path_count_total(mu, nu, lam, cap, degree_cap)
    return Fraction(total) / class_size(mu)


def path_count_from(h, nu, lam):
    """Signature-``lam`` paths from the single permutation ``h`` into cyc(nu)."""
    n = len(h)
    steps = [(a, b) for b in range(2, n + 1) for a in range(1, b)]
    count = 0
    for seq in product(steps, repeat=sum(lam)):
        if signature(seq) != tuple(lam):
            continue
        g = h
        for a, b in seq:
            g = compose(transposition(n, a, b), g)
        if cycle_type(g) == tuple(nu):
            count += 1
    return count


# -- Jucys-Murphy elements ----------------------------------------------------


@lru_cache(maxsize=None)
def jucys_murphy(n, b):
    """J_b = sum_{a<b} (a b) as an explicit element; J_1 = 0."""
    return {transposition(n, a, b): Fraction(1) for a in range(1, b)}


@lru_cache(maxsize=None)
def _jm_power(n, b, k):
    if k == 0:
        return {identity(n): Fraction(1)}
    return multiply(jucys_murphy(n, b), _jm_power(n, b, k - 1))


def _distinct_arrangements(lam, n):
    padded = tuple(lam) + (0,) * (n - len(lam))
    return set(permutations(padded))


@lru_cache(maxsize=None)
def jm_element(kind, lam, n):
    """m_lam(J_1..J_n) or e_lam(J_1..J_n) as an explicit group-algebra element."""
    lam = tuple(lam)
    if kind == "m":
        if len(lam) > n:
            return {}
        out = {}
        for exps in _distinct_arrangements(lam, n):
            if exps[0]:
                continue  # J_1 = 0
            term = {identity(n): Fraction(1)}
            for b, k in enumerate(exps, start=1):
                if k:
                    term = multiply(term, _jm_power(n, b, k))
            out = add(out, term)
        return out
    if kind == "e":
        out = {identity(n): Fraction(1)}
        for k in lam:
            ek = {}
            for bs in combinations(range(2, n + 1), k):
                term = {identity(n): Fraction(1)}
                for b in bs:
                    term = multiply(term, jucys_murphy(n, b))
                ek = add(ek, term)
            out = multiply(out, ek)
        return out
    raise ValueError(f"unknown symmetric function kind {kind!r}; use 'm' or 'e'")


def jm_symmetric_apply(kind, lam, target, cap=None, degree_cap=None):
    """Multiply a central element by m_lam(J) or e_lam(J); result in the C basis."""
    n = target.n
    config.check_cap("n", n, config.brute_force_cap() if cap is None else cap)
    config.check_cap("d", sum(lam), config.PATH_DEGREE_CAP if degree_cap is None else degree_cap)
    return project(multiply(jm_element(kind, tuple(lam), n), expand(target)), n)


def colength_class_sum(n, k):
    """e_k(J) as a central element: the sum of all C_rho with colength k."""
    return CenterElement(n, CYCLE_SUM, {rho: 1 for rho in all_partitions(n) if colength(rho) == k})
