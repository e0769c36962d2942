"""Exponential-polynomial closed forms over the exact rationals.

An `ExpPoly` represents a function on the integers of the shape

    f(n) = sum_t p_t(n) * b_t^n

with pairwise distinct nonzero rational bases b_t and rational polynomial
prefactors p_t.  This class of functions is closed under addition,
multiplication, argument shifts n -> n + d, and partial summation
sum_{i<n} f(i), which makes it a normal form for every structure function
handled by the package: pure exponentials, polynomials (base 1), and parity
factors (base -1) are all just terms.

Canonical form: terms are sorted by base, equal bases merged, zero
prefactors dropped, coefficient lists trimmed of trailing zeros.  Structural
equality of canonical forms coincides with pointwise equality on the
integers (polynomially weighted exponentials with distinct bases are
linearly independent as sequences).

Internally a prefactor is a tuple of coefficients (c_0, c_1, ...) meaning
c_0 + c_1*n + c_2*n^2 + ...
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable

from .rationals import ONE, ZERO, RationalLike, rat

Coeffs = tuple[Fraction, ...]


# -- polynomial helpers on coefficient tuples --------------------------------


def poly_trim(coeffs: Iterable[RationalLike]) -> Coeffs:
    out = [rat(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_add(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    return poly_trim(
        (a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)
    )


def poly_scale(a: Coeffs, s: Fraction) -> Coeffs:
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def poly_mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly_trim(out)


def poly_eval(a: Coeffs, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_shift_arg(a: Coeffs, d: int) -> Coeffs:
    """Coefficients of p(n + d) given those of p(n)."""
    if d == 0 or not a:
        return poly_trim(a)
    out = [ZERO] * len(a)
    for j, cj in enumerate(a):
        # c_j * (n + d)^j expanded binomially
        for i in range(j + 1):
            out[i] += cj * comb(j, i) * Fraction(d) ** (j - i)
    return poly_trim(out)


# -- antidifference solvers (the core of exact partial summation) ------------


def _antidifference_geometric(p: Coeffs, b: Fraction) -> Coeffs:
    """Solve b*r(n+1) - r(n) = p(n) for a polynomial r of the same degree.

    Exists and is unique for b != 1: the triangular system has diagonal
    entries b - 1.
    """
    d = len(p) - 1
    r = [ZERO] * (d + 1)
    for i in range(d, -1, -1):
        upper = sum(b * comb(j, i) * r[j] for j in range(i + 1, d + 1))
        r[i] = (p[i] - upper) / (b - 1)
    return poly_trim(r)


def _antidifference_polynomial(p: Coeffs) -> Coeffs:
    """Solve r(n+1) - r(n) = p(n) with r(0) = 0; r has degree deg(p) + 1."""
    d = len(p) - 1
    r = [ZERO] * (d + 2)
    for i in range(d, -1, -1):
        upper = sum(comb(j, i) * r[j] for j in range(i + 2, d + 2))
        r[i + 1] = (p[i] - upper) / comb(i + 1, i)
    r[0] = ZERO
    return poly_trim(r)


# -- the ExpPoly class --------------------------------------------------------


class ExpPoly:
    """Canonical sum of polynomially weighted exponentials of the argument."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[RationalLike, Iterable[RationalLike]]] = ()):
        merged: dict[Fraction, Coeffs] = {}
        for base, coeffs in terms:
            b = rat(base)
            if b == 0:
                raise ValueError("ExpPoly bases must be nonzero")
            p = poly_trim(coeffs)
            if not p:
                continue
            merged[b] = poly_add(merged.get(b, ()), p)
        self._terms = tuple((b, merged[b]) for b in sorted(merged) if merged[b])

    # construction helpers

    @staticmethod
    def zero() -> "ExpPoly":
        return ExpPoly()

    @staticmethod
    def constant(c: RationalLike) -> "ExpPoly":
        return ExpPoly([(1, (rat(c),))])

    @staticmethod
    def polynomial(coeffs: Iterable[RationalLike]) -> "ExpPoly":
        """The base-1 term c0 + c1*n + c2*n^2 + ..."""
        return ExpPoly([(1, coeffs)])

    @staticmethod
    def exponential(base: RationalLike, coeff: RationalLike = 1) -> "ExpPoly":
        """The single term coeff * base^n."""
        return ExpPoly([(base, (rat(coeff),))])

    @staticmethod
    def parity(coeff: RationalLike = 1) -> "ExpPoly":
        """coeff * (-1)^n."""
        return ExpPoly.exponential(-1, coeff)

    # inspection

    @property
    def terms(self) -> tuple[tuple[Fraction, Coeffs], ...]:
        return self._terms

    def bases(self) -> tuple[Fraction, ...]:
        return tuple(b for b, _ in self._terms)

    def exponential_bases(self) -> tuple[Fraction, ...]:
        """Bases of the genuinely exponential terms (base 1 excluded)."""
        return tuple(b for b, _ in self._terms if b != 1)

    def coeffs_for(self, base: RationalLike) -> Coeffs:
        b = rat(base)
        for bb, p in self._terms:
            if bb == b:
                return p
        return ()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and self._terms[0][0] == 1 and len(self._terms[0][1]) == 1
        )

    def term_count(self) -> int:
        """Size measure: each term counts deg+1 (a polynomial of degree d is d+1 terms)."""
        return sum(len(p) for _, p in self._terms)

    # evaluation and arithmetic

    def __call__(self, n: int) -> Fraction:
        total = ZERO
        for b, p in self._terms:
            total += poly_eval(p, Fraction(n)) * b**n
        return total

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return ExpPoly(list(self._terms) + list(other._terms))

    def __neg__(self) -> "ExpPoly":
        return ExpPoly((b, poly_scale(p, -ONE)) for b, p in self._terms)

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExpPoly):
            return ExpPoly(
                (b1 * b2, poly_mul(p1, p2))
                for b1, p1 in self._terms
                for b2, p2 in other._terms
            )
        s = rat(other)
        return ExpPoly((b, poly_scale(p, s)) for b, p in self._terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def shift(self, d: int) -> "ExpPoly":
        """The closed form of n -> f(n + d)."""
        return ExpPoly((b, poly_scale(poly_shift_arg(p, d), b**d)) for b, p in self._terms)

    def prefix_sum(self) -> "ExpPoly":
        """The closed form of n -> sum_{i=0}^{n-1} f(i), exactly; vanishes at 0.

        Geometric terms (base != 1) stay at the same polynomial degree and
        shed a constant; the base-1 term gains one degree (power sums).
        """
        pieces: list[tuple[Fraction, Coeffs]] = []
        for b, p in self._terms:
            if b == 1:
                pieces.append((ONE, _antidifference_polynomial(p)))
            else:
                r = _antidifference_geometric(p, b)
                pieces.append((b, r))
                pieces.append((ONE, (-poly_eval(r, ZERO),)))
        return ExpPoly(pieces)

    # identity and display

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"ExpPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for b, p in self._terms:
            if b == 1:
                chunks.extend(_poly_chunks(p))
            else:
                base_str = str(b) if b.denominator == 1 and b >= 0 else f"({b})"
                for j, c in enumerate(p):
                    if c == 0:
                        continue
                    factor = f"{base_str}^n" if j == 0 else f"n{_pow_suffix(j)}*{base_str}^n"
                    chunks.append(_coef_chunk(c, factor))
        first_sign, first_body = chunks[0]
        out = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in chunks[1:]:
            out = f"{out} {sign} {body}"
        return out


def _pow_suffix(j: int) -> str:
    return "" if j == 1 else f"^{j}"


def _coef_chunk(c: Fraction, factor: str):
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = factor if mag == 1 else f"{_wrap(mag)}*{factor}"
    return (sign, body)


def _wrap(x: Fraction) -> str:
    return str(x) if x.denominator == 1 else f"({x})"


def _poly_chunks(p: Coeffs):
    chunks = []
    for j, c in enumerate(p):
        if c == 0:
            continue
        if j == 0:
            chunks.append(("-" if c < 0 else "+", _wrap(abs(c)) if abs(c) != 1 else "1"))
        else:
            chunks.append(_coef_chunk(c, f"n{_pow_suffix(j)}"))
    return chunks
