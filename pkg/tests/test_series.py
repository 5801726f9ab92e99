from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from whurwitz.series import TruncatedSeries

D = 5
coeffs_st = st.lists(st.fractions(max_denominator=9, min_value=-5, max_value=5), max_size=D + 1)
series_st = coeffs_st.map(lambda c: TruncatedSeries(c, D))
unit_st = st.tuples(st.fractions(min_value=1, max_value=3, max_denominator=5), coeffs_st).map(
    lambda t: TruncatedSeries([t[0]] + t[1][:D], D))


def test_geometric_reciprocal():
    one_minus_z = TruncatedSeries([1, -1], D)
    assert list(one_minus_z.reciprocal()) == [1] * (D + 1)


def test_truncation():
    s = TruncatedSeries([1, 1], 2)
    assert list(s ** 3) == [1, 3, 3]
    assert s[7] == 0


def test_rescale_and_eval():
    s = TruncatedSeries([1, 2, 3], 2)
    assert list(s.rescale(Fraction(1, 2))) == [1, 1, Fraction(3, 4)]
    assert s(Fraction(1, 2)) == Fraction(11, 4)


@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries([], D)


@given(unit_st)
def test_reciprocal(a):
    assert a * a.reciprocal() == TruncatedSeries.one(D)


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([0, 1], D).reciprocal()
