"""Acceptance criteria, one pass/fail line each, exact equality throughout.

Run with ``pytest tests/test_acceptance.py -s`` to see the report lines, or
directly with ``python3 tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial, prod

from whurwitz import weightgen as wg
from whurwitz.characters import character, idempotent_from_cycles, table, to_idempotent_basis
from whurwitz.group_algebra import factorization_count, jm_symmetric_apply
from whurwitz.hurwitz import hurwitz_table, multispecies_F
from whurwitz.partitions import (all_partitions, class_size, contents, dimension, hook_product,
                                 z_order)
from whurwitz.symmetric import elementary_product, monomial
from whurwitz.tau import schur_reexpansion, toda_block
from whurwitz.verify import CORE_PRESETS, check_hybrid, check_quantum

RESULTS = {}


def report(num, title, ok, started, detail=""):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({time.monotonic() - started:.1f}s)"
    if detail:
        line += f"  {detail}"
    print(line)
    RESULTS[num] = ok
    assert ok, line


# 1 -----------------------------------------------------------------------------

def test_criterion_1_character_validity():
    t0 = time.monotonic()
    ok, detail = True, ""
    for n in range(1, 9):
        tab = table(n)
        parts = tab.partitions
        zs = [z_order(mu) for mu in parts]
        for i, a in enumerate(parts):
            if tab.chi[i, -1] != Fraction(factorial(n)) / hook_product(a):
                ok, detail = False, f"dimension of {a}"
            for j in range(i, len(parts)):
                row = sum(Fraction(tab.chi[i, k] * tab.chi[j, k], zs[k]) for k in range(len(parts)))
                col = sum(tab.chi[k, i] * tab.chi[k, j] for k in range(len(parts)))
                if row != (i == j) or col != (zs[i] if i == j else 0):
                    ok, detail = False, f"orthogonality at n={n}, {a}, {parts[j]}"
    elapsed = time.monotonic() - t0
    report(1, "character tables n<=8 orthogonal, dimensions n!/h", ok and elapsed <= 10, t0, detail)


# 2 -----------------------------------------------------------------------------

def frobenius_schur(profiles):
    n = sum(profiles[0])
    total = Fraction(0)
    for lam in all_partitions(n):
        dim = dimension(lam)
        term = Fraction(dim, factorial(n)) ** 2
        for mu in profiles:
            term *= Fraction(class_size(mu) * character(lam, mu), dim)
        total += term
    return total


SPOT_N6 = [((2, 1, 1, 1, 1), (2, 1, 1, 1, 1), (1,) * 6), ((3, 3), (3, 3), (3, 1, 1, 1)),
           ((6,), (5, 1), (2, 1, 1, 1, 1)), ((4, 2), (2, 2, 2), (3, 2, 1)),
           ((6,), (6,), (3, 3)), ((2, 2, 1, 1), (3, 2, 1), (4, 1, 1))]


def test_criterion_2_frobenius_equals_hurwitz():
    t0 = time.monotonic()
    cases = []
    for n in range(1, 6):
        parts = all_partitions(n)
        for k in (1, 2, 3):
            cases += list(product(parts, repeat=k))
    cases += SPOT_N6
    bad = [c for c in cases
           if Fraction(factorization_count(c), factorial(sum(c[0]))) != frobenius_schur(c)]
    ok = not bad and time.monotonic() - t0 <= 300
    report(2, f"brute-force Frobenius = Frobenius-Schur over {len(cases)} profile tuples", ok, t0,
           f"first failure {bad[0]}" if bad else "")


# 3 -----------------------------------------------------------------------------

def test_criterion_3_three_routes():
    t0 = time.monotonic()
    detail = ""
    for preset in CORE_PRESETS:
        G = wg.parse_preset(preset)
        for n in range(1, 5):
            tabs = [hurwitz_table(G, n, 3, r).values for r in ("character", "paths", "geometric")]
            if not tabs[0] == tabs[1] == tabs[2]:
                detail = detail or f"{preset} n={n}"
        if hurwitz_table(G, 5, 3).values != hurwitz_table(G, 5, 3, "paths").values:
            detail = detail or f"{preset} n=5"
    ok = not detail and time.monotonic() - t0 <= 900
    report(3, "character = paths = geometric for the core presets", ok, t0, detail)


# 4 -----------------------------------------------------------------------------

def test_criterion_4_content_eigenvalues():
    t0 = time.monotonic()
    detail = ""
    lams = [lam for k in range(5) for lam in all_partitions(k)]
    for n in range(1, 6):
        for mu in all_partitions(n):
            f = idempotent_from_cycles(mu)
            cs = [Fraction(c) for c in contents(mu)]
            for lam in lams:
                for kind, ev in (("m", monomial), ("e", elementary_product)):
                    value = ev(lam, cs)
                    got = to_idempotent_basis(jm_symmetric_apply(kind, lam, f))
                    if got.coeffs != ({mu: value} if value else {}):
                        detail = detail or f"{kind}_{lam} on F_{mu}"
    report(4, "m_lam(J), e_lam(J) act on F by content evaluation", not detail, t0, detail)


# 5 -----------------------------------------------------------------------------

def test_criterion_5_tau_generating_function():
    t0 = time.monotonic()
    detail = ""
    for preset in CORE_PRESETS:
        G = wg.parse_preset(preset)
        for n in range(1, 6):
            block = toda_block(G, n, 4, check=False)
            ref = hurwitz_table(G, n, 4).values
            if block.powersum_coeffs != ref:
                detail = detail or f"{preset} n={n} power sums"
            parts = all_partitions(n)
            for d in range(5):
                S = schur_reexpansion(block, d)
                for i, a in enumerate(parts):
                    for j in range(len(parts)):
                        want = block.schur_coeffs[a][d] if i == j else 0
                        if S[i, j] != want:
                            detail = detail or f"{preset} n={n} d={d} Schur entry {i},{j}"
    report(5, "tau power-sum blocks = Hurwitz tables, Schur form diagonal", not detail, t0, detail)


# 6 -----------------------------------------------------------------------------

def test_criterion_6_content_product_closed_forms():
    t0 = time.monotonic()
    detail = ""
    D = 6
    for n in range(0, 7):
        for lam in all_partitions(n):
            # z^|lam| (1/z)_lam: expand prod (x + c) in x = 1/z
            poly = [Fraction(1)]
            for c in contents(lam):
                poly = [a + c * b for a, b in zip([0] + poly, poly + [0])]
            closed_E = [poly[n - k] if k <= n else 0 for k in range(D + 1)]
            s = Fraction(sum(p * (p - 2 * i + 1) for i, p in enumerate(lam, 1)), 2)
            closed_exp = [s**k / factorial(k) for k in range(D + 1)]
            if list(wg.content_product_series(wg.E(), lam, D)) != closed_E:
                detail = detail or f"E at {lam}"
            if list(wg.content_product_series(wg.exp(), lam, D)) != closed_exp:
                detail = detail or f"exp at {lam}"
    report(6, "r^E and r^exp match their closed forms to degree 6", not detail, t0, detail)


# 7 -----------------------------------------------------------------------------

def test_criterion_7_quantum_reductions():
    t0 = time.monotonic()
    failures = [r for q in (Fraction(1, 2), Fraction(1, 3)) for n in range(1, 5)
                for r in [check_quantum(n, 3, q)] if r["status"] != "pass"]
    report(7, "Macdonald/Hall-Littlewood/Jack reductions, exact t-interpolation", not failures, t0,
           str(failures[0]) if failures else "")


# 8 -----------------------------------------------------------------------------

def test_criterion_8_multispecies():
    t0 = time.monotonic()
    detail = ""
    pool = [(wg.E(), 1), (wg.H(), 1), (wg.exp(), 2), (wg.eprime(Fraction(1, 3)), 1),
            (wg.classical([1, Fraction(1, 2)]).dual(), 2)]
    for n in range(1, 5):
        for k in (1, 2, 3):
            for combo in combinations_with_replacement(range(len(pool)), k):
                factors = [pool[i] for i in combo]
                ref = multispecies_F(factors, n)
                for order in set(permutations(range(k))):
                    if not (multispecies_F([factors[i] for i in order], n) == ref).all():
                        detail = detail or f"order dependence n={n} {combo}"
        r = check_hybrid(n, 4)
        if r["status"] != "pass":
            detail = detail or str(r)
    report(8, "multispecies order independence, hybrid Q(w,z) extraction", not detail, t0, detail)


# 9 -----------------------------------------------------------------------------

def _verify(jobs):
    cmd = [sys.executable, "-m", "whurwitz", "verify", "--suite", "core", "--n", "4",
           "--jobs", str(jobs)]
    return subprocess.run(cmd, capture_output=True, check=False)


def test_criterion_9_determinism():
    t0 = time.monotonic()
    a, b = _verify(1), _verify(8)
    ok = a.returncode == 0 and b.returncode == 0 and a.stdout == b.stdout and len(a.stdout) > 0
    report(9, "verify --suite core byte-identical at jobs 1 and 8", ok, t0)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for fn in tests:
        try:
            fn()
        except AssertionError:
            pass
    print(f"{sum(RESULTS.values())}/{len(tests)} criteria passed")
    sys.exit(0 if all(RESULTS.values()) and len(RESULTS) == len(tests) else 1)
