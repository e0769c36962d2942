import random
from fractions import Fraction

import pytest

from qoscil import (
    FockWindow,
    InvalidParameter,
    Operator,
    annihilator,
    arik_coon,
    bem,
    calogero_vasiliev,
    casimir_commutator,
    casimir_quommutator,
    chain,
    commutator,
    creator,
    macfarlane_biedenharn,
    non_fock_spectrum,
    verify_casimir_relation,
    verify_relation,
)
from qoscil.exppoly import ExpPoly
from conftest import random_distinct, random_rational

ONE = ExpPoly.constant(1)


class TestCommutatorCasimir:
    def test_harmonic_oscillator_is_zero(self):
        F = ExpPoly.polynomial([0, 1])
        window = FockWindow.from_function(F, 12)
        C = casimir_commutator(F, window)
        assert verify_relation(C, Operator(window, {})).ok

    def test_centrality_and_spectrum_across_catalog(self):
        cases = [
            arik_coon(2).final_F,
            macfarlane_biedenharn(2).final_F,
            calogero_vasiliev(Fraction(1, 2)).final_F,
            bem(Fraction(1, 2), 2).final_F,
        ]
        for F in cases:
            window = FockWindow.from_function(F, 16)
            C = casimir_commutator(F, window)
            up, down = creator(window), annihilator(window)
            zero = Operator(window, {})
            assert verify_relation(commutator(C, up), zero).ok
            assert verify_relation(commutator(C, down), zero).ok
            diagonal = C.diagonal()
            assert diagonal is not None and not any(diagonal)


class TestBracketCasimir:
    def test_geometric_unit_case(self):
        pair = casimir_quommutator(ONE, 2)
        # mu(n) = 1 - 2^-n = 2^-n (2^n - 1)
        assert pair.mu == ExpPoly([(1, (1,)), (Fraction(1, 2), (-1,))])
        assert pair.nu == ExpPoly.exponential(Fraction(1, 2))

    def test_direct_sum_example(self):
        pair = casimir_quommutator(ExpPoly.exponential(2), Fraction(1, 2))
        assert pair.mu(2) == 10  # 2*1 + 4*2
        c = chain(ONE, [2, Fraction(1, 2)])
        assert pair.mu(2) == Fraction(1, 2) ** -2 * c.F(2)(2)

    def test_recurrences_hold_structurally(self):
        rng = random.Random(53)
        for _ in range(8):
            f = chain(ONE, [random_rational(rng)]).final_f
            q = random_rational(rng)
            pair = casimir_quommutator(f, q)
            assert pair.mu(0) == 0 and pair.nu(0) == 1
            assert pair.mu - pair.mu.shift(-1) == pair.nu * f.shift(-1)
            assert pair.nu == pair.nu.shift(-1) * (1 / q)
            for n in range(1, 21):
                assert pair.mu(n) - pair.mu(n - 1) == q**-n * f(n - 1)

    def test_zero_parameter_rejected(self):
        with pytest.raises(InvalidParameter):
            casimir_quommutator(ONE, 0)


class TestChainRelation:
    def test_single_step_any_parameter(self):
        for q in (Fraction(2), Fraction(-5, 3), Fraction(1, 7)):
            check = verify_casimir_relation(chain(ONE, [q]), 0)
            assert check.ok

    def test_two_step_chain(self):
        check = verify_casimir_relation(chain(ONE, [2, Fraction(1, 2)]), 1)
        assert check.ok

    def test_random_chains_all_steps(self):
        rng = random.Random(59)
        for _ in range(5):
            params = random_distinct(rng, rng.randint(1, 4))
            c = chain(ONE, params)
            for j in range(c.depth):
                window = FockWindow.from_function(c.F(j + 1), 16)
                check = verify_casimir_relation(c, j, window)
                assert check.ok, (params, j, check)

    def test_dressing_identity_structurally(self):
        # mu = nu * F' holds as a closed-form identity, not just pointwise
        rng = random.Random(61)
        for _ in range(6):
            params = [random_rational(rng) for _ in range(rng.randint(1, 3))]
            c = chain(ONE, params)
            j = c.depth - 1
            pair = casimir_quommutator(c.f(j), c.params[j])
            assert pair.mu == pair.nu * c.F(j + 1)

    def test_step_index_validation(self):
        with pytest.raises(ValueError):
            verify_casimir_relation(chain(ONE, [2]), 1)


def test_non_fock_spectrum_diagnostic():
    F = arik_coon(2).final_F
    assert non_fock_spectrum(F, 0, 5) == [F(m) for m in range(5)]
    shifted = non_fock_spectrum(F, Fraction(3, 2), 5)
    assert shifted == [F(m) - Fraction(3, 2) for m in range(5)]
    assert shifted[0] != 0  # nonzero Casimir value marks a non-Fock candidate
