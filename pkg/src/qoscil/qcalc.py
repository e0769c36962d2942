"""Jackson and multi-base q-derivatives acting on exact polynomials.

A polynomial in x is a tuple of rational coefficients, lowest degree first
(the same convention as the ExpPoly prefactors).  The Jackson derivative

    D_q g(x) = (g(qx) - g(x)) / (x (q - 1))

sends x^l to [l]_q x^(l-1); at q = 1 it is the ordinary derivative.  The
multi-base derivative is the weight-averaged sum of Jackson derivatives
over distinct bases, and acts on monomials through the weighted average of
the deformed integers: D_{q_1..q_k} x^l = (sum_i w_i [l]_{q_i}) x^(l-1).

The symmetric-oscillator derivative is the two-base case at (q, 1/q); its
weights reduce to the rational pair (q/(q+1), 1/(q+1)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exppoly import Coeffs, poly_trim
from .rationals import RationalLike, omega_weights, q_integer, rat

__all__ = ["jackson_derivative", "multi_q_derivative", "poly_trim"]


def jackson_derivative(q: RationalLike, g: Sequence[RationalLike]) -> Coeffs:
    """Coefficients of the Jackson q-derivative of g; exact for every rational q."""
    q = rat(q)
    coeffs = poly_trim(g)
    return poly_trim(q_integer(q, ell) * coeffs[ell] for ell in range(1, len(coeffs)))


def multi_q_derivative(
    params: Sequence[RationalLike], g: Sequence[RationalLike]
) -> Coeffs:
    """Weighted average of Jackson derivatives over distinct bases != 1.

    Monomial action: x^l maps to F(l) x^(l-1) where F(l) is the weighted
    average of the deformed integers [l]_{q_i}.
    """
    weights = omega_weights(params)
    bases = [rat(p) for p in params]
    coeffs = poly_trim(g)
    out = [Fraction(0)] * max(len(coeffs) - 1, 0)
    for w, q in zip(weights, bases):
        for ell in range(1, len(coeffs)):
            out[ell - 1] += w * q_integer(q, ell) * coeffs[ell]
    return poly_trim(out)
