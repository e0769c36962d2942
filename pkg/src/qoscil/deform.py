"""Recursive minimal deformation of oscillator commutation relations.

A commutation relation [a, a+] = f(n) can be "minimally deformed" into the
Q-bracket relation a a+ - q a+ a = f(n).  Within the Fock representation
that deformed relation fixes a new structure function

    F'(l) = sum_{i=0}^{l-1} q^i f(l-1-i),        F'(0) = 0,

and is therefore equivalent to the plain commutator [a, a+] = f'(n) with
f'(n) = F'(n+1) - F'(n).  Iterating the step produces a parameter chain
q_1, ..., q_k whose closed forms stay inside the `ExpPoly` class; every
well-known one-, two-, and multi-parameter deformed oscillator appears at
some depth of this recursion, and the catalog constructors at the bottom
of the module build them directly.

All computation is exact: the step is evaluated in closed form through
`ExpPoly.prefix_sum`, never by accumulating numeric truncations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateParameters, InvalidParameter
from .exppoly import ExpPoly
from .rationals import RationalLike, rat

__all__ = [
    "DeformationChain",
    "minimal_deform",
    "chain",
    "polynomial_start",
    "arik_coon",
    "macfarlane_biedenharn",
    "chakrabarti_jagannathan",
    "calogero_vasiliev",
    "bem",
    "qcv",
    "qcv_defining_relation",
    "match_quadratic_start",
    "FAMILIES",
]


@dataclass(frozen=True)
class DeformationChain:
    """A starting commutator plus the full record of deformation steps.

    ``steps[j]`` holds the pair (F_{j+1}, f_{j+1}) produced by deforming with
    ``params[j]``; intermediates are kept because the named oscillators are
    identified with specific depths of the recursion.
    """

    f0: ExpPoly
    params: tuple[Fraction, ...]
    steps: tuple[tuple[ExpPoly, ExpPoly], ...]

    @property
    def depth(self) -> int:
        return len(self.params)

    def f(self, j: int) -> ExpPoly:
        """Commutator closed form after j steps (j = 0 is the start)."""
        if j == 0:
            return self.f0
        return self.steps[j - 1][1]

    def F(self, j: int) -> ExpPoly:
        """Structure function introduced at step j (1-based)."""
        return self.steps[j - 1][0]

    @property
    def final_f(self) -> ExpPoly:
        return self.f(self.depth)

    @property
    def final_F(self) -> ExpPoly:
        return self.F(self.depth)

    def extended(self, q: RationalLike) -> "DeformationChain":
        """The chain with one more deformation step appended."""
        q = rat(q)
        F_next, f_next = minimal_deform(self.final_f, q)
        return DeformationChain(
            self.f0, self.params + (q,), self.steps + ((F_next, f_next),)
        )


def minimal_deform(f: ExpPoly, q: RationalLike) -> tuple[ExpPoly, ExpPoly]:
    """One deformation step: from [a,a+] = f to a a+ - q a+ a = f.

    Returns (F_next, f_next) where F_next(l) = sum_{i<l} q^i f(l-1-i) in
    closed form and f_next is its forward difference.  F_next(0) = 0 and a
    deformation of unity stays a deformation of unity.
    """
    q = rat(q)
    if q == 0:
        raise InvalidParameter("deformation parameter must be nonzero")
    # sum_{i<l} q^i f(l-1-i) = q^(l-1) * sum_{j<l} (1/q)^j f(j)
    inner = (f * ExpPoly.exponential(1 / q)).prefix_sum()
    F_next = (inner * ExpPoly.exponential(q)) * (1 / q)
    f_next = F_next.shift(1) - F_next
    return F_next, f_next


def chain(f0: ExpPoly, params: list[RationalLike] | tuple[RationalLike, ...]) -> DeformationChain:
    """Run the recursion from f0 through each parameter in order."""
    qs = tuple(rat(p) for p in params)
    steps: list[tuple[ExpPoly, ExpPoly]] = []
    f = f0
    for q in qs:
        F_next, f_next = minimal_deform(f, q)
        steps.append((F_next, f_next))
        f = f_next
    return DeformationChain(f0, qs, tuple(steps))


def polynomial_start(
    degree: int,
    coeffs: list[RationalLike] | tuple[RationalLike, ...],
    params: list[RationalLike] | tuple[RationalLike, ...],
) -> DeformationChain:
    """Chain whose starting commutator is a polynomial in the number operator.

    ``coeffs`` lists the polynomial coefficients lowest degree first
    (length degree + 1).  Each step trades one polynomial degree for a new
    exponential, so after ``degree`` steps only exponentials remain.  The
    first parameter must differ from 1 when the start actually has positive
    degree, otherwise the step is the identity and the degree never drops.
    """
    cs = [rat(c) for c in coeffs]
    if len(cs) != degree + 1:
        raise InvalidParameter(f"need {degree + 1} coefficients for degree {degree}")
    qs = [rat(p) for p in params]
    if degree >= 1 and qs and qs[0] == 1:
        raise DegenerateParameters("first parameter must differ from 1 for a polynomial start")
    return chain(ExpPoly.polynomial(cs), qs)


# -- the catalog --------------------------------------------------------------


def arik_coon(q: RationalLike) -> DeformationChain:
    """First deformation of the harmonic oscillator: a a+ - q a+ a = 1.

    Equivalent commutator: [a, a+] = q^n.
    """
    return chain(ExpPoly.constant(1), [rat(q)])


def macfarlane_biedenharn(q: RationalLike) -> DeformationChain:
    """The symmetric two-base oscillator, parameters q and 1/q.

    Equivalent commutator in square-root-free form:
    (q^(n+1) + q^(-n)) / (q + 1).
    """
    q = rat(q)
    if q in (0, 1, -1):
        raise DegenerateParameters("symmetric oscillator needs q outside {0, 1, -1}")
    return chain(ExpPoly.constant(1), [q, 1 / q])


def chakrabarti_jagannathan(q1: RationalLike, q2: RationalLike) -> DeformationChain:
    """Two-parameter oscillator: a a+ - q2 a+ a = q1^n.

    Reduces to the symmetric oscillator when q1*q2 = 1.
    """
    return chain(ExpPoly.constant(1), [rat(q1), rat(q2)])


def calogero_vasiliev(nu: RationalLike) -> DeformationChain:
    """Parity-deformed oscillator [a, a+] = 1 + 2*nu*(-1)^n.

    Arises as the single deformation, at parameter -1, of the linear start
    (1 + 2*nu) + 2*n.
    """
    nu = rat(nu)
    return polynomial_start(1, [1 + 2 * nu, 2], [-1])


def bem(nu: RationalLike, q: RationalLike) -> DeformationChain:
    """The parity-and-scale deformed oscillator [a, a+] = q^-n (1 + 2 nu (-1)^n).

    Built as a linear start pushed through parameters (1/q, -1/q): the
    two-exponential step f_2 = (1/q)^n + 2 nu (-1/q)^n is the commutator
    above, and the appended third step at parameter q presents the same
    algebra as the bracket relation a a+ - q a+ a = f_2.
    """
    nu, q = rat(nu), rat(q)
    if q in (0, 1, -1):
        raise DegenerateParameters("scale parameter must lie outside {0, 1, -1}")
    alpha01 = (2 * nu - (1 + q) / (1 - q)) * (1 - 1 / q)
    return polynomial_start(1, [1 + 2 * nu, alpha01], [1 / q, -1 / q, q])


def _q_power_2nu(q: Fraction, nu: Fraction) -> Fraction:
    two_nu = 2 * nu
    if two_nu.denominator != 1:
        raise InvalidParameter(
            "exact arithmetic needs q^(2 nu) rational: 2*nu must be an integer"
        )
    return q ** int(two_nu)


def qcv(
    nu: RationalLike, q: RationalLike, Q: RationalLike, sign: int = 1
) -> ExpPoly:
    """Four-exponential bracket form of the parity-graded q-oscillator.

    Returns the closed form of a a+ - Q a+ a over bases q, 1/q, -q, -1/q.
    Choosing Q in {q, 1/q, -q, -1/q} kills the matching term, leaving three
    exponentials.  ``sign=-1`` selects the mirrored convention, which is the
    same family at q -> 1/q.
    """
    nu, q, Q = rat(nu), rat(q), rat(Q)
    if q in (0, 1, -1):
        raise DegenerateParameters("base must lie outside {0, 1, -1}")
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1")
    if sign == -1:
        q = 1 / q
    mu = _q_power_2nu(q, nu)
    d = 2 * (q - 1 / q)
    return ExpPoly(
        [
            (q, ((q - Q) * (mu + 1) / d,)),
            (1 / q, ((Q - 1 / q) * (1 / mu + 1) / d,)),
            (-q, ((Q + q) * (mu - 1) / d,)),
            (-1 / q, ((Q + 1 / q) * (1 - 1 / mu) / d,)),
        ]
    )


def qcv_defining_relation(
    nu: RationalLike, q: RationalLike, sign: int = 1
) -> tuple[ExpPoly, ExpPoly, ExpPoly]:
    """The parity-graded q-oscillator as a three-term relation (alpha, beta, gamma).

    The relation is a*alpha(n)*a+ - a+*beta(n)*a = gamma(n) with alpha = 1,
    beta(n) = q^(1 + 2 nu (-1)^n) and gamma the matching parity-split
    right-hand side.  Everything is expanded over even/odd level parts so
    the coefficients stay rational (q^(2 nu) must be rational, hence
    2*nu integral).
    """
    nu, q = rat(nu), rat(q)
    if q in (0, 1, -1):
        raise DegenerateParameters("base must lie outside {0, 1, -1}")
    if sign not in (1, -1):
        raise InvalidParameter("sign must be +1 or -1")
    if sign == -1:
        q = 1 / q
    mu = _q_power_2nu(q, nu)
    alpha = ExpPoly.constant(1)
    # The parity factor multiplies a+ a from the left; rewritten with beta
    # between the ladder operators its argument shifts by one level.
    beta_outside = ExpPoly(
        [(1, (q * (mu + 1 / mu) / 2,)), (-1, (q * (mu - 1 / mu) / 2,))]
    )
    beta = beta_outside.shift(1)
    span = q - 1 / q
    even = (q * mu - 1 / (q * mu)) / span
    odd = (q / mu - mu / q) / (span * mu)
    gamma = ExpPoly(
        [(1 / q, ((even + odd) / 2,)), (-1 / q, ((even - odd) / 2,))]
    )
    return alpha, beta, gamma


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Exact Gaussian elimination for a small square system."""
    n = len(rows)
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise DegenerateParameters("singular system: starts do not span the target")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def match_quadratic_start(nu: RationalLike, q: RationalLike) -> tuple[Fraction, Fraction, Fraction]:
    """Quadratic-start coefficients whose third recursion hits the qcv bracket.

    With parameters (1/q, -q, -1/q), three deformation steps send a quadratic
    start to a three-exponential commutator; its coefficients depend linearly
    on the start, so matching them to ``qcv(nu, q, Q=q)`` is an exact 3x3
    solve.  Returns the start coefficients (constant, linear, quadratic).
    """
    nu, q = rat(nu), rat(q)
    target = qcv(nu, q, q)
    params = (1 / q, -q, -1 / q)
    basis_columns = []
    for j in range(3):
        unit = [Fraction(0)] * 3
        unit[j] = Fraction(1)
        f3 = polynomial_start(2, unit, params).final_f
        if set(f3.bases()) - set(params):
            raise DegenerateParameters("basis start leaks outside the target bases")
        basis_columns.append([f3.coeffs_for(b)[0] if f3.coeffs_for(b) else Fraction(0) for b in params])
    rows = [[basis_columns[j][i] for j in range(3)] for i in range(3)]
    rhs = [target.coeffs_for(b)[0] if target.coeffs_for(b) else Fraction(0) for b in params]
    solution = _solve_linear(rows, rhs)
    check = polynomial_start(2, solution, params).final_f
    if check != target:
        raise DegenerateParameters("matched start fails to reproduce the target bracket")
    return tuple(solution)


FAMILIES = {
    "arik-coon": arik_coon,
    "mb": macfarlane_biedenharn,
    "cj": chakrabarti_jagannathan,
    "cv": calogero_vasiliev,
    "bem": bem,
    "qcv": qcv,
}
