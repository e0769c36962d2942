"""Turning a commutator into an equivalent simpler bracket relation.

Given [a, a+] = phi(n), the same Fock algebra can be presented as
a a+ - a+ beta(n) a = 1 (when phi(0) = 1), or as a Q-bracket
a a+ - Q a+ a = Phi(n) for any scalar Q with

    Phi(n) = phi(n) + (1 - Q) * sum_{i<n} phi(i).

Choosing Q equal to one of phi's exponential bases removes that base from
Phi (or lowers its polynomial degree), which is what "simpler" means here:
`simplest_Q` ranks candidates by the term count of the resulting Phi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroAtLevel, PreconditionViolated
from .exppoly import ExpPoly
from .rationals import RationalLike, rat

__all__ = [
    "BetaForm",
    "PhiForm",
    "to_unit_quommutator",
    "to_unit_quommutator_with_gamma",
    "to_Q_quommutator",
    "simplest_Q",
]


@dataclass(frozen=True)
class BetaForm:
    """The relation a a+ - a+ beta(n) a = gamma0.

    beta is an exact ratio of closed forms (generally not itself an
    ExpPoly), plus a table of its values for direct operator use.
    """

    numerator: ExpPoly
    denominator: ExpPoly
    values: tuple[Fraction, ...]
    gamma0: Fraction

    def beta(self, n: int) -> Fraction:
        return self.numerator(n) / self.denominator(n)


@dataclass(frozen=True)
class PhiForm:
    """The relation a a+ - Q a+ a = Phi(n)."""

    Q: Fraction
    Phi: ExpPoly


def to_unit_quommutator(phi: ExpPoly, N: int) -> BetaForm:
    """Present [a, a+] = phi(n) as a a+ - a+ beta(n) a = 1.

    Requires phi(0) = 1; beta(n) is the ratio of consecutive partial sums
    of phi, tabulated for n < N.  A vanishing partial sum leaves some beta
    undefined and raises `DivisionByZeroAtLevel`.
    """
    if phi(0) != 1:
        raise PreconditionViolated(
            f"unit form needs phi(0) = 1, got {phi(0)}; "
            "supply gamma0 explicitly via to_unit_quommutator_with_gamma"
        )
    return to_unit_quommutator_with_gamma(phi, Fraction(1), N)


def to_unit_quommutator_with_gamma(
    phi: ExpPoly, gamma0: RationalLike, N: int
) -> BetaForm:
    """General form a a+ - a+ beta(n) a = gamma0 with gamma0 = phi(0).

    beta(n) = (sum_{i<=n+1} phi(i) - gamma0) / sum_{i<=n} phi(i).
    """
    gamma0 = rat(gamma0)
    if phi(0) != gamma0:
        raise PreconditionViolated(f"gamma0 must equal phi(0) = {phi(0)}")
    partial = phi.prefix_sum()
    numerator = partial.shift(2) - ExpPoly.constant(gamma0)
    denominator = partial.shift(1)
    values = []
    for n in range(N):
        den = denominator(n)
        if den == 0:
            raise DivisionByZeroAtLevel(n, f"partial sum of phi vanishes through level {n}")
        values.append(numerator(n) / den)
    return BetaForm(numerator, denominator, tuple(values), gamma0)


def to_Q_quommutator(phi: ExpPoly, Q: RationalLike) -> PhiForm:
    """Present [a, a+] = phi(n) as a a+ - Q a+ a = Phi(n), in closed form."""
    Q = rat(Q)
    Phi = phi + phi.prefix_sum() * (1 - Q)
    return PhiForm(Q, Phi)


def simplest_Q(phi: ExpPoly) -> list[PhiForm]:
    """All base-killing choices of Q, ranked by how small Phi becomes.

    Candidates are exactly the exponential bases of phi; each removes its
    own exponential (or drops a polynomial prefactor degree).  Ties share a
    rank and are all returned.  A purely polynomial phi has no exponential
    base to kill, so the commutator itself (Q = 1) is returned.
    """
    candidates = phi.exponential_bases()
    if not candidates:
        return [to_Q_quommutator(phi, 1)]
    forms = [to_Q_quommutator(phi, base) for base in candidates]
    forms.sort(key=lambda form: (form.Phi.term_count(), form.Q))
    return forms
