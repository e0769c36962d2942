"""Casimir operators of deformed oscillator algebras.

The commutator algebra [a, a+] = f(n) with structure function F has the
Casimir C = F(n) - a+ a: it commutes with the ladder pair and vanishes
identically on the Fock representation (F(0) = 0).  The bracket algebra
a a+ - q a+ a = f(n) likewise has C~ = mu(n) - nu(n) a+ a with

    nu(n) = q^-n,      mu(n) = sum_{i=1}^{n} q^-i f(i-1),

fixed by the sufficient conditions mu(n) - mu(n-1) = nu(n) f(n-1) and
nu(n) = nu(n-1)/q together with mu(0) = 0, nu(0) = 1.  Because mu is a
geometric partial sum of f it satisfies mu = nu * F' structurally, where
F' is the structure function of the once-more-deformed chain; hence
C~ = q^-n (F'(n) - a+ a), i.e. the bracket Casimir is the exponential
dressing of the next commutator Casimir.

Nonvanishing Casimir eigenvalues characterize non-Fock representations;
`non_fock_spectrum` is the exact diagnostic for a candidate eigenvalue and
no representation construction is attempted here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .deform import DeformationChain
from .errors import InvalidParameter
from .exppoly import ExpPoly
from .opalg import FockWindow, Operator, annihilator, commutator, creator, diag, verify_relation
from .rationals import RationalLike, rat

__all__ = [
    "CasimirPair",
    "CasimirCheck",
    "casimir_commutator",
    "casimir_quommutator",
    "verify_casimir_relation",
    "non_fock_spectrum",
]


@dataclass(frozen=True)
class CasimirPair:
    """Closed forms (mu, nu) of the bracket-algebra Casimir mu(n) - nu(n) a+ a."""

    mu: ExpPoly
    nu: ExpPoly
    q: Fraction

    def operator(self, window: FockWindow) -> Operator:
        up, down = creator(window), annihilator(window)
        return diag(window, self.mu) - diag(window, self.nu) * (up * down)


def casimir_commutator(F: ExpPoly, window: FockWindow) -> Operator:
    """C = F(n) - a+ a on the window built from the same structure function."""
    up, down = creator(window), annihilator(window)
    return diag(window, F) - up * down


def casimir_quommutator(f: ExpPoly, q: RationalLike) -> CasimirPair:
    """Casimir closed forms for the algebra a a+ - q a+ a = f(n)."""
    q = rat(q)
    if q == 0:
        raise InvalidParameter("bracket parameter must be nonzero")
    nu = ExpPoly.exponential(1 / q)
    mu = (f * nu).prefix_sum() * (1 / q)
    return CasimirPair(mu, nu, q)


@dataclass(frozen=True)
class CasimirCheck:
    """Outcome of the full bracket/commutator Casimir comparison at one step."""

    ok: bool
    mu_matches_dressing: bool
    recurrences_hold: bool
    central: bool
    fock_eigenvalues_zero: bool
    witness: tuple | None = None


def verify_casimir_relation(
    chain: DeformationChain, j: int, window: FockWindow | None = None
) -> CasimirCheck:
    """Check C~_j = q_{j+1}^-n C_{j+1} and centrality at step j of a chain.

    ``j`` indexes the commutator level (0 <= j < depth): the bracket algebra
    a a+ - q_{j+1} a+ a = f_j has structure function F_{j+1}.  All checks are
    exact; closed-form identities are compared structurally and operator
    identities on the window (default: built from F_{j+1}).
    """
    if not 0 <= j < chain.depth:
        raise ValueError(f"step index {j} outside 0..{chain.depth - 1}")
    q = chain.params[j]
    f_j = chain.f(j)
    F_next = chain.F(j + 1)
    pair = casimir_quommutator(f_j, q)

    mu_ok = pair.mu == pair.nu * F_next
    recurrence_mu = pair.mu - pair.mu.shift(-1) == pair.nu * f_j.shift(-1)
    recurrence_nu = pair.nu == pair.nu.shift(-1) * (1 / q)
    normalized = pair.mu(0) == 0 and pair.nu(0) == 1
    rec_ok = recurrence_mu and recurrence_nu and normalized

    if window is None:
        window = FockWindow.from_function(F_next, 16)
    up, down = creator(window), annihilator(window)
    tilde = pair.operator(window)
    dressed = diag(window, pair.nu) * casimir_commutator(F_next, window)
    relation = verify_relation(tilde, dressed)
    central = (
        verify_relation(commutator(tilde, up), Operator(window, {})).ok
        and verify_relation(commutator(tilde, down), Operator(window, {})).ok
    )
    diagonal = tilde.diagonal()
    zero_spectrum = diagonal is not None and not any(diagonal)

    ok = mu_ok and rec_ok and relation.ok and central and zero_spectrum
    witness = None if ok else relation.discrepancy
    return CasimirCheck(ok, mu_ok, rec_ok, central, zero_spectrum, witness)


def non_fock_spectrum(
    F: ExpPoly, casimir_value: RationalLike, levels: int
) -> list[Fraction]:
    """Candidate a+ a spectrum F(m) - c in a representation with Casimir value c.

    The Fock representation is c = 0; a nonzero c shifts every level and is
    the signature of a non-Fock representation.  This evaluates the defining
    closed form only; no representation is constructed.
    """
    c = rat(casimir_value)
    return [F(m) - c for m in range(levels)]
