"""Normal ordering of (a+ a)^m under deformed commutation relations.

For operators obeying a a+ - q a+ a = f(n) the power (a+ a)^m expands as

    (a+ a)^m = sum_{l=1}^{m} (a+)^l C_{m,l}(n) a^l

and the coefficients obey a deformed Stirling recurrence driven by the
operator-valued bracket

    bracket(f, q, l)(n) = sum_{i=0}^{l-1} q^(l-1-i) f(n+i),

which is the coefficient in [a^l, a+]_{q^l} = bracket * a^(l-1).  The plain
commutator presentation [a, a+] = f(n) has its own expansion with the
unweighted bracket; the two tables differ (normal ordering is not invariant
under equivalent presentations) and are reconciled through the window they
share.

Coefficients are closed-form `ExpPoly` values, so degenerate limits are
structural facts: with f = 1 the q-table is the constant q-Stirling table,
and at q = 1 it collapses to Stirling numbers of the second kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exppoly import ExpPoly
from .opalg import FockWindow, VerifyReport, annihilator, creator, diag, verify_relation
from .rationals import RationalLike, rat

__all__ = [
    "bracket",
    "bracket_bar",
    "NormalOrderTable",
    "normal_order_table",
    "normal_order_table_bar",
    "verify_normal_order",
]


def bracket(f: ExpPoly, q: RationalLike, ell: int) -> ExpPoly:
    """Closed form of sum_{i<ell} q^(ell-1-i) f(n+i); zero for ell = 0."""
    if ell < 0:
        raise ValueError("bracket needs ell >= 0")
    q = rat(q)
    total = ExpPoly.zero()
    for i in range(ell):
        total = total + f.shift(i) * q ** (ell - 1 - i)
    return total


def bracket_bar(f: ExpPoly, ell: int) -> ExpPoly:
    """Closed form of sum_{i<ell} f(n+i), the unweighted bracket."""
    if ell < 0:
        raise ValueError("bracket needs ell >= 0")
    total = ExpPoly.zero()
    for i in range(ell):
        total = total + f.shift(i)
    return total


@dataclass(frozen=True)
class NormalOrderTable:
    """Triangular table of normal-ordering coefficients C_{m,l}, 1 <= l <= m <= m_max."""

    variant: str  # "q" or "bar"
    f: ExpPoly
    q: Fraction | None
    m_max: int
    entries: dict[tuple[int, int], ExpPoly]

    def entry(self, m: int, ell: int) -> ExpPoly:
        return self.entries.get((m, ell), ExpPoly.zero())

    def row(self, m: int) -> list[ExpPoly]:
        return [self.entry(m, ell) for ell in range(1, m + 1)]


def normal_order_table(f: ExpPoly, q: RationalLike, m_max: int = 6) -> NormalOrderTable:
    """Coefficients for the bracket presentation a a+ - q a+ a = f(n).

    C_{1,1} = 1 and
    C_{m+1,l}(n) = q^(l-1) C_{m,l-1}(n+1) + bracket(f, q, l)(n) C_{m,l}(n).
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    q = rat(q)
    entries: dict[tuple[int, int], ExpPoly] = {(1, 1): ExpPoly.constant(1)}
    brackets = {ell: bracket(f, q, ell) for ell in range(1, m_max + 1)}
    for m in range(1, m_max):
        for ell in range(1, m + 2):
            raised = entries.get((m, ell - 1), ExpPoly.zero()).shift(1) * q ** (ell - 1)
            kept = brackets[ell] * entries.get((m, ell), ExpPoly.zero())
            value = raised + kept
            if value:
                entries[(m + 1, ell)] = value
    return NormalOrderTable("q", f, q, m_max, entries)


def normal_order_table_bar(f: ExpPoly, m_max: int = 6) -> NormalOrderTable:
    """Coefficients for the plain commutator presentation [a, a+] = f(n)."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    entries: dict[tuple[int, int], ExpPoly] = {(1, 1): ExpPoly.constant(1)}
    brackets = {ell: bracket_bar(f, ell) for ell in range(1, m_max + 1)}
    for m in range(1, m_max):
        for ell in range(1, m + 2):
            raised = entries.get((m, ell - 1), ExpPoly.zero()).shift(1)
            kept = brackets[ell] * entries.get((m, ell), ExpPoly.zero())
            value = raised + kept
            if value:
                entries[(m + 1, ell)] = value
    return NormalOrderTable("bar", f, None, m_max, entries)


def verify_normal_order(
    table: NormalOrderTable, window: FockWindow, m_max: int | None = None
) -> tuple[bool, list[tuple[int, VerifyReport]]]:
    """Check the expansion (a+ a)^m = sum_l (a+)^l C_{m,l}(n) a^l on the window.

    The window must carry the algebra the table was derived in: the bracket
    table needs a a+ - q a+ a = f(n) to hold on it, the bar table needs
    [a, a+] = f(n).  Failures come back as (m, report) witnesses.
    """
    m_top = table.m_max if m_max is None else min(m_max, table.m_max)
    up, down = creator(window), annihilator(window)
    failures: list[tuple[int, VerifyReport]] = []
    lhs = diag(window, 1)
    base = up * down
    for m in range(1, m_top + 1):
        lhs = lhs * base
        rhs = None
        for ell in range(1, m + 1):
            piece = (up**ell) * diag(window, table.entry(m, ell)) * (down**ell)
            rhs = piece if rhs is None else rhs + piece
        report = verify_relation(lhs, rhs)
        if not report.ok:
            failures.append((m, report))
    return not failures, failures
