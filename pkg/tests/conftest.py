"""Shared oracles and generators for the exact-identity test suite.

Oracles here are deliberately independent of the closed-form code paths
they check: brute-force nested sums, direct enumeration, and classical
recurrences only.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from qoscil.exppoly import ExpPoly


def brute_phi(params: list[Fraction], ell: int) -> Fraction:
    """Composition-sum oracle: enumerate i_1 + ... + i_k = ell - k + 1."""
    k = len(params)
    degree = ell - k + 1
    if degree < 0:
        return Fraction(0)
    total = Fraction(0)
    for split in itertools.combinations(range(degree + k - 1), k - 1):
        exponents = []
        prev = -1
        for s in split:
            exponents.append(s - prev - 1)
            prev = s
        exponents.append(degree + k - 2 - prev)
        term = Fraction(1)
        for q, e in zip(params, exponents):
            term *= q**e
        total += term
    return total


def brute_chain_values(f0, params, count: int) -> list[Fraction]:
    """Evaluate the deformation recursion by literal nested summation."""
    values = [f0(i) for i in range(count + 1)]
    for q in params:
        F = [Fraction(0)]
        for level in range(1, len(values) + 1):
            F.append(sum(q**i * values[level - 1 - i] for i in range(level)))
        values = [F[i + 1] - F[i] for i in range(len(F) - 1)]
    return values[:count]


def classical_stirling(m_max: int) -> dict[tuple[int, int], int]:
    """Stirling numbers of the second kind via S(m+1,l) = S(m,l-1) + l S(m,l)."""
    table = {(1, 1): 1}
    for m in range(1, m_max):
        for ell in range(1, m + 2):
            table[(m + 1, ell)] = table.get((m, ell - 1), 0) + ell * table.get((m, ell), 0)
    return table


def random_rational(rng: random.Random, exclude: tuple = (), span: int = 6) -> Fraction:
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, 4))
        if value != 0 and value not in exclude:
            return value


def random_distinct(rng: random.Random, k: int, exclude_one: bool = True) -> list[Fraction]:
    exclude = (Fraction(1),) if exclude_one else ()
    out: list[Fraction] = []
    while len(out) < k:
        out.append(random_rational(rng, exclude=exclude + tuple(out)))
    return out


def random_exppoly(rng: random.Random, max_terms: int = 3, max_degree: int = 2) -> ExpPoly:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        base = random_rational(rng, span=5)
        degree = rng.randint(0, max_degree)
        coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(degree + 1)]
        terms.append((base, coeffs))
    return ExpPoly(terms)
