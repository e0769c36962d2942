import random
from fractions import Fraction

import pytest

from qoscil import (
    DegenerateParameters,
    chain,
    jackson_derivative,
    multi_q_derivative,
    omega_weights,
)
from qoscil.exppoly import ExpPoly
from conftest import random_distinct

ONE = ExpPoly.constant(1)


class TestJacksonDerivative:
    def test_monomial_action(self):
        assert jackson_derivative(2, (0, 0, 0, 1)) == (0, 0, 7)  # [3]_2 x^2

    def test_classical_limit(self):
        assert jackson_derivative(1, (0, 0, 0, 1)) == (0, 0, 3)
        assert jackson_derivative(1, (4, 3, 2)) == (3, 4)

    def test_constants_vanish(self):
        assert jackson_derivative(Fraction(5, 3), (7,)) == ()
        assert jackson_derivative(2, ()) == ()

    def test_linearity(self):
        q = Fraction(3, 2)
        g = (1, 2, 3, 4)
        h = (0, 5, 0, 1)
        summed = tuple(a + b for a, b in zip(g, h))
        want = tuple(
            a + b
            for a, b in zip(jackson_derivative(q, g), jackson_derivative(q, h))
        )
        assert jackson_derivative(q, summed) == want

    def test_difference_quotient_definition(self):
        # (g(qx) - g(x)) / (x(q-1)) checked pointwise at rational x
        q = Fraction(2)
        g = (1, Fraction(1, 2), 0, 3)

        def g_at(x):
            return sum(c * x**i for i, c in enumerate(g))

        derived = jackson_derivative(q, g)
        for x in (Fraction(1), Fraction(-3, 2), Fraction(7, 5)):
            lhs = sum(c * x**i for i, c in enumerate(derived))
            assert lhs == (g_at(q * x) - g_at(x)) / (x * (q - 1))


class TestMultiBaseDerivative:
    def test_examples(self):
        assert multi_q_derivative([2, Fraction(1, 2)], (0, 0, 1)) == (0, Fraction(5, 2))
        assert multi_q_derivative([2, Fraction(1, 2)], (0, 1)) == (1,)

    def test_single_base_reduction(self):
        q = Fraction(7, 4)
        g = (1, 0, 2, 5)
        assert multi_q_derivative([q], g) == jackson_derivative(q, g)

    def test_monomial_action_matches_chain_structure_function(self):
        rng = random.Random(67)
        for _ in range(6):
            params = random_distinct(rng, rng.randint(1, 4))
            F = chain(ONE, params).final_F
            for ell in range(1, 21):
                mono = (0,) * ell + (1,)
                derived = multi_q_derivative(params, mono)
                assert derived == (0,) * (ell - 1) + (F(ell),)

    def test_symmetric_pair_weights(self):
        for q in (Fraction(2), Fraction(5, 3), Fraction(-7, 2)):
            weights = omega_weights([q, 1 / q])
            assert weights == (q / (q + 1), 1 / (q + 1))

    def test_degenerate_parameters_rejected(self):
        with pytest.raises(DegenerateParameters):
            multi_q_derivative([2, 2], (0, 1))
        with pytest.raises(DegenerateParameters):
            multi_q_derivative([1, 2], (0, 1))
