from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from whurwitz.center import CenterElement
from whurwitz.characters import idempotent_from_cycles, to_idempotent_basis
from whurwitz.errors import CapExceeded, WeightMismatch
from whurwitz.group_algebra import (class_multiply, colength_class_sum, compose,
                                    conjugacy_classes, convolve_classes, count_paths_by_signature,
                                    cycle_type, factorization_count, frobenius_count, identity,
                                    inverse, jm_symmetric_apply, path_count_from,
                                    path_count_total, signature, transposition)
from whurwitz.partitions import all_partitions, class_size, contents, z_order
from whurwitz.symmetric import elementary_product, monomial

perm_st = st.integers(1, 6).flatmap(lambda n: st.permutations(range(n)).map(tuple))


@given(perm_st)
def test_inverse(g):
    assert compose(g, inverse(g)) == identity(len(g))
    assert cycle_type(inverse(g)) == cycle_type(g)


def test_transposition_and_cycle_type():
    t = transposition(4, 1, 3)
    assert t == (2, 1, 0, 3)
    assert cycle_type(t) == (2, 1, 1)
    assert cycle_type(compose(transposition(3, 1, 2), transposition(3, 2, 3))) == (3,)


def test_conjugacy_class_sizes():
    for n in range(1, 6):
        classes = conjugacy_classes(n)
        for mu in all_partitions(n):
            assert len(classes[mu]) == class_size(mu)


def test_signature():
    assert signature([(1, 2), (1, 3), (2, 3)]) == (2, 1)
    assert signature([]) == ()


def test_class_product_n3():
    c21 = CenterElement.unit(3, (2, 1))
    expected = {(1, 1, 1): 3, (3,): 3}
    assert convolve_classes(c21, c21).coeffs == expected
    assert class_multiply(c21, c21).coeffs == expected


def test_identity_class_is_unit():
    for n in range(1, 5):
        unit = CenterElement.unit(n, (1,) * n)
        for mu in all_partitions(n):
            x = CenterElement.unit(n, mu)
            assert class_multiply(unit, x) == x


@pytest.mark.parametrize("n", range(1, 5))
def test_class_multiply_matches_convolution(n):
    parts = all_partitions(n)
    for a in parts:
        for b in parts:
            x, y = CenterElement.unit(n, a), CenterElement.unit(n, b)
            assert class_multiply(x, y) == convolve_classes(x, y)


def test_weight_mismatch():
    with pytest.raises(WeightMismatch):
        class_multiply(CenterElement.unit(2, (2,)), CenterElement.unit(3, (3,)))
    with pytest.raises(WeightMismatch):
        factorization_count([(2,), (2, 1)])


def test_frobenius_examples():
    assert frobenius_count([(2, 1), (2, 1), (3,)]) == 1
    assert frobenius_count([(2,), (2,), (2,)]) == 0
    for n in range(1, 5):
        for mu in all_partitions(n):
            assert frobenius_count([mu, mu]) == Fraction(1, z_order(mu))


@pytest.mark.parametrize("n", [3, 4])
def test_minimal_transitive_factorizations_of_a_cycle(n):
    # an n-cycle has n^(n-2) factorizations into n-1 transpositions
    profiles = [(2,) + (1,) * (n - 2)] * (n - 1) + [(n,)]
    assert factorization_count(profiles) == class_size((n,)) * n ** (n - 2)


def test_parallel_count_matches_serial():
    profiles = [(2, 1, 1, 1), (3, 2), (3, 1, 1)]
    assert factorization_count(profiles, workers=3) == factorization_count(profiles)


def test_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        factorization_count([(7,), (7,)], cap=6)
    monkeypatch.setenv("HURWITZ_CAP_N", "3")
    with pytest.raises(CapExceeded):
        factorization_count([(4,), (4,)])


def test_path_examples():
    assert path_count_total((1, 1, 1), (2, 1), (1,)) == 3
    assert count_paths_by_signature((1, 1, 1), (1, 1, 1), (2,)) == 3
    for n in range(1, 4):
        for mu in all_partitions(n):
            for nu in all_partitions(n):
                assert count_paths_by_signature(mu, nu, ()) == (mu == nu)


@pytest.mark.parametrize("n", [3, 4])
def test_class_average_matches_single_representative(n):
    # path counts do not depend on the representative of cyc(mu)
    for mu in all_partitions(n):
        for nu in all_partitions(n):
            for lam in [(1,), (2,), (1, 1), (2, 1)]:
                reps = conjugacy_classes(n)[mu]
                counts = {path_count_from(h, nu, lam) for h in reps[:3]}
                assert len(counts) == 1
                assert count_paths_by_signature(mu, nu, lam) == counts.pop()


def test_transposition_class_from_jm():
    for n in range(2, 6):
        unit = CenterElement.unit(n, (1,) * n)
        got = jm_symmetric_apply("e", (1,), unit)
        assert got.coeffs == {(2,) + (1,) * (n - 2): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_elementary_jm_is_colength_class_sum(n):
    unit = CenterElement.unit(n, (1,) * n)
    for k in range(n):
        assert jm_symmetric_apply("e", (k,) if k else (), unit) == colength_class_sum(n, k)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("kind", ["m", "e"])
def test_content_eigenvalues(n, kind):
    evaluate = monomial if kind == "m" else elementary_product
    for lam in [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)]:
        for mu in all_partitions(n):
            f = idempotent_from_cycles(mu)
            got = to_idempotent_basis(jm_symmetric_apply(kind, lam, f))
            value = evaluate(lam, [Fraction(c) for c in contents(mu)])
            assert got.coeffs == ({mu: value} if value else {})


def test_path_degree_cap():
    with pytest.raises(CapExceeded):
        path_count_total((2, 1), (2, 1), (3, 3), degree_cap=5)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 3))
def test_number_of_paths_of_length_d(n, d):
    # every step has comb(n, 2) choices, so all paths from one point total comb(n,2)^d
    total = 0
    for nu in all_partitions(n):
        for lam in all_partitions(d):
            total += path_count_total((1,) * n, nu, lam)
    assert total == comb(n, 2) ** d
