import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qoscil.exppoly import ExpPoly
from conftest import random_exppoly


def exppolys(draw_bases=st.fractions(min_value=-4, max_value=4, max_denominator=3)):
    term = st.tuples(
        draw_bases.filter(lambda b: b != 0),
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=3),
    )
    return st.lists(term, max_size=3).map(ExpPoly)


class TestCanonicalForm:
    def test_merges_equal_bases(self):
        f = ExpPoly([(2, (1,)), (2, (3,)), (1, (0, 1))])
        assert f == ExpPoly([(1, (0, 1)), (2, (4,))])

    def test_strips_zero_terms(self):
        assert ExpPoly([(2, (0,)), (3, ())]).is_zero()
        assert ExpPoly([(2, (1,)), (2, (-1,))]).is_zero()

    def test_trailing_zero_coefficients_trimmed(self):
        assert ExpPoly([(1, (1, 0, 0))]).terms == ((Fraction(1), (Fraction(1),)),)

    def test_rejects_zero_base(self):
        with pytest.raises(ValueError):
            ExpPoly([(0, (1,))])

    def test_structural_equality_is_hashable(self):
        f = ExpPoly([(2, (1,)), (1, (5,))])
        g = ExpPoly([(1, (5,)), (2, (1,))])
        assert f == g and hash(f) == hash(g)


class TestArithmetic:
    @given(exppolys(), exppolys(), st.integers(-30, 30))
    @settings(max_examples=60)
    def test_pointwise_add_mul(self, f, g, n):
        assert (f + g)(n) == f(n) + g(n)
        assert (f - g)(n) == f(n) - g(n)
        assert (f * g)(n) == f(n) * g(n)

    @given(exppolys(), st.integers(-4, 4), st.integers(-30, 30))
    @settings(max_examples=60)
    def test_pointwise_shift(self, f, d, n):
        assert f.shift(d)(n) == f(n + d)

    def test_base_product(self):
        assert ExpPoly.exponential(2) * ExpPoly.exponential(3) == ExpPoly.exponential(6)

    def test_scalar_multiplication(self):
        f = ExpPoly([(2, (1, 1))])
        assert (f * Fraction(1, 2))(3) == f(3) / 2
        assert (0 * f).is_zero()

    def test_eval_at_negative_arguments(self):
        f = ExpPoly([(Fraction(2), (1,)), (Fraction(-1, 3), (0, 1))])
        assert f(-2) == Fraction(2) ** -2 + (-2) * Fraction(-1, 3) ** -2


class TestPrefixSum:
    def test_geometric(self):
        assert ExpPoly.exponential(2).prefix_sum() == ExpPoly([(2, (1,)), (1, (-1,))])

    def test_triangular(self):
        got = ExpPoly.polynomial([0, 1]).prefix_sum()
        assert got == ExpPoly.polynomial([0, Fraction(-1, 2), Fraction(1, 2)])

    def test_vanishes_at_zero_and_matches_direct_sums(self):
        rng = random.Random(23)
        for _ in range(30):
            f = random_exppoly(rng)
            s = f.prefix_sum()
            assert s(0) == 0
            running = Fraction(0)
            for n in range(0, 20):
                assert s(n) == running
                running += f(n)

    @given(exppolys())
    @settings(max_examples=40)
    def test_difference_of_prefix_sum_recovers_f(self, f):
        s = f.prefix_sum()
        assert s.shift(1) - s == f


def test_term_count_counts_polynomial_degrees():
    f = ExpPoly([(1, (1, 2)), (-1, (3,))])
    assert f.term_count() == 3


def test_parity_term():
    k = ExpPoly.parity()
    assert [k(n) for n in range(4)] == [1, -1, 1, -1]


def test_str_round_readability():
    f = ExpPoly([(2, (1,)), (1, (Fraction(1, 2), 1)), (Fraction(-1, 2), (-3,))])
    text = str(f)
    assert "2^n" in text and "n" in text
    assert str(ExpPoly.zero()) == "0"
