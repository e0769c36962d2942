"""Exact rational scalars and the q-number combinatorics built on them.

Every scalar in the package is a `fractions.Fraction` (aliased `Rational`):
arbitrary precision, always in lowest terms with positive denominator, and
exact under all arithmetic.  This module adds the small family of scalar
functions everything else is expressed through:

  q_integer(q, l)        (q^l - 1)/(q - 1), the geometric q-analog of l
  basic_number(p, q, l)  (p^l - q^l)/(p - q), its two-base symmetric form
  phi(params, l)         complete homogeneous sum of degree l-k+1 in k bases
  omega_weights(params)  partial-fraction weights over distinct bases
  residue_sum(params, l) the 0/1 moment table of those weights

The composition-sum definitions of `phi` and `basic_number` are total (they
tolerate coincident bases); the partial-fraction forms (`omega_weights`,
`residue_sum`) require bases in general position and raise
`DegenerateParameters` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters, ExprParseError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Fraction | int | str


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optional sign, arbitrary precision)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprParseError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    return str(value)


def q_integer(q: RationalLike, ell: int) -> Fraction:
    """The q-deformed integer: sum of q^i for i < ell.

    Equals (q^ell - 1)/(q - 1) for q != 1 and ell itself at q = 1.
    """
    if ell < 0:
        raise ValueError("q_integer needs ell >= 0")
    q = rat(q)
    if q == 1:
        return Fraction(ell)
    return (q**ell - 1) / (q - 1)


def basic_number(q1: RationalLike, q2: RationalLike, ell: int) -> Fraction:
    """The two-base deformed integer (q1^ell - q2^ell)/(q1 - q2).

    Defined for all base pairs via the homogeneous sum over i + j = ell - 1
    of q1^i q2^j; the coincident limit is ell * q1^(ell-1).
    """
    if ell < 0:
        raise ValueError("basic_number needs ell >= 0")
    q1, q2 = rat(q1), rat(q2)
    if q1 == q2:
        if ell == 0:
            return ZERO
        return ell * q1 ** (ell - 1)
    return (q1**ell - q2**ell) / (q1 - q2)


def phi(params: list[RationalLike] | tuple[RationalLike, ...], ell: int) -> Fraction:
    """Complete homogeneous symmetric sum of degree ell - k + 1 in k bases.

    Sums q_1^{i_1} ... q_k^{i_k} over all nonnegative compositions with
    i_1 + ... + i_k = ell - k + 1; the empty sum (ell < k - 1) is 0.  At
    all bases equal to 1 this is binomial(ell, k - 1); for distinct bases
    it agrees with the partial-fraction form sum_i q_i^ell / prod'(q_i - q_m).
    """
    bases = [rat(p) for p in params]
    if not bases:
        raise ValueError("phi needs at least one base")
    if any(b == 0 for b in bases):
        raise ValueError("phi bases must be nonzero")
    degree = ell - len(bases) + 1
    if degree < 0:
        return ZERO
    # Fold one base at a time: h[m] holds the degree-m homogeneous sum so far.
    h = [ONE] + [ZERO] * degree
    for b in bases:
        acc = list(h)
        for m in range(1, degree + 1):
            acc[m] = sum((b**i) * h[m - i] for i in range(m + 1))
        h = acc
    return h[degree]


def _check_general_position(bases: list[Fraction], forbid_unit: bool) -> None:
    if len(set(bases)) != len(bases):
        raise DegenerateParameters(f"coincident bases in {bases}")
    if forbid_unit and any(b == 1 for b in bases):
        raise DegenerateParameters("a base equal to 1 breaks the partial-fraction weights")


def omega_weights(params: list[RationalLike] | tuple[RationalLike, ...]) -> tuple[Fraction, ...]:
    """Partial-fraction weights prod'_{m}((q_i - 1)/(q_i - q_m)) for each base.

    Bases must be pairwise distinct and none equal to 1.  The weights sum
    to exactly 1.
    """
    bases = [rat(p) for p in params]
    _check_general_position(bases, forbid_unit=True)
    weights = []
    for i, qi in enumerate(bases):
        w = ONE
        for m, qm in enumerate(bases):
            if m != i:
                w *= (qi - 1) / (qi - qm)
        weights.append(w)
    return tuple(weights)


def omega(params: list[RationalLike] | tuple[RationalLike, ...], i: int) -> Fraction:
    """Weight of the i-th base (0-based) in `omega_weights(params)`."""
    return omega_weights(params)[i]


@dataclass(frozen=True)
class WeightVector:
    """Distinct bases together with their partial-fraction weights.

    The weights always sum to exactly 1; bases must be distinct, nonzero
    and different from 1.
    """

    params: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]

    @classmethod
    def from_params(
        cls, params: list[RationalLike] | tuple[RationalLike, ...]
    ) -> "WeightVector":
        bases = tuple(rat(p) for p in params)
        return cls(bases, omega_weights(bases))

    def __len__(self) -> int:
        return len(self.params)


def residue_sum(params: list[RationalLike] | tuple[RationalLike, ...], ell: int) -> Fraction:
    """sum_i (q_i - 1)^ell / prod'_m (q_i - q_m) over distinct bases.

    For 0 <= ell <= k-1 this collapses to 1 at ell = k-1 and 0 below it.
    """
    if ell < 0:
        raise ValueError("residue_sum needs ell >= 0")
    bases = [rat(p) for p in params]
    _check_general_position(bases, forbid_unit=False)
    total = ZERO
    for i, qi in enumerate(bases):
        denom = ONE
        for m, qm in enumerate(bases):
            if m != i:
                denom *= qi - qm
        total += (qi - 1) ** ell / denom
    return total
