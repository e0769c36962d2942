"""Seeded exact-identity batteries behind the ``verify`` CLI command.

Each suite is a list of (name, check) pairs; a check either returns None
(pass) or a string describing the first witness of failure.  Randomized
checks draw small rationals from a seeded generator so runs are
reproducible; every comparison is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import casimir as casimir_mod
from . import deform, inverse, opalg, ordering
from .exppoly import ExpPoly
from .rationals import omega_weights, phi, q_integer, residue_sum

__all__ = ["CheckResult", "SUITE_NAMES", "run_suites"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _rand_rational(rng: random.Random, exclude: tuple = ()) -> Fraction:
    while True:
        value = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if value != 0 and value not in exclude:
            return value


def _rand_distinct(rng: random.Random, k: int, exclude_one: bool = True) -> list[Fraction]:
    exclude = (Fraction(1),) if exclude_one else ()
    out: list[Fraction] = []
    while len(out) < k:
        value = _rand_rational(rng, exclude=exclude + tuple(out))
        out.append(value)
    return out


def _brute_force_level(f0, params, n: int) -> Fraction:
    """Nested evaluation of the deformation recursion, no closed forms."""
    values = [f0(i) for i in range(n + 2)]
    for q in params:
        F = [Fraction(0)]
        for level in range(1, len(values) + 1):
            F.append(sum(q**i * values[level - 1 - i] for i in range(level)))
        values = [F[i + 1] - F[i] for i in range(len(F) - 1)]
    return values[n]


# -- equivalence suite ---------------------------------------------------------


def _check_residue_table(rng: random.Random) -> str | None:
    for _ in range(30):
        k = rng.randint(1, 6)
        params = _rand_distinct(rng, k, exclude_one=False)
        for ell in range(k):
            expected = Fraction(1 if ell == k - 1 else 0)
            got = residue_sum(params, ell)
            if got != expected:
                return f"residue sum at k={k}, ell={ell}: {got} != {expected}"
        if all(p != 1 for p in params):
            total = sum(omega_weights(params))
            if total != 1:
                return f"weights of {params} sum to {total}"
    return None


def _check_homogeneous_partial_fraction(rng: random.Random) -> str | None:
    for _ in range(20):
        k = rng.randint(1, 5)
        params = _rand_distinct(rng, k, exclude_one=False)
        for ell in range(0, 13):
            direct = phi(params, ell)
            pf = Fraction(0)
            for i, qi in enumerate(params):
                denom = Fraction(1)
                for m, qm in enumerate(params):
                    if m != i:
                        denom *= qi - qm
                pf += qi**ell / denom
            if direct != pf:
                return f"homogeneous sum vs partial fractions at {params}, ell={ell}"
    return None


def _check_recursion_brute_force(rng: random.Random) -> str | None:
    one = ExpPoly.constant(1)
    for _ in range(8):
        k = rng.randint(1, 4)
        params = [_rand_rational(rng) for _ in range(k)]
        result = deform.chain(one, params)
        for n in range(0, 13):
            expected = _brute_force_level(one, params, n)
            got = result.final_f(n)
            if got != expected:
                return f"chain{params} closed form at n={n}: {got} != {expected}"
    return None


def _catalog_chains(rng: random.Random) -> list[tuple[str, deform.DeformationChain]]:
    items = [
        ("arik-coon q=2", deform.arik_coon(2)),
        ("arik-coon q=1/2", deform.arik_coon(Fraction(1, 2))),
        ("mb q=2", deform.macfarlane_biedenharn(2)),
        ("cj (2,3)", deform.chakrabarti_jagannathan(2, 3)),
        ("cv nu=1/2", deform.calogero_vasiliev(Fraction(1, 2))),
        ("bem nu=1/2 q=2", deform.bem(Fraction(1, 2), 2)),
    ]
    params = _rand_distinct(rng, rng.randint(2, 4))
    items.append((f"random chain {params}", deform.chain(ExpPoly.constant(1), params)))
    return items


def _check_step_equivalences(rng: random.Random, N: int) -> str | None:
    for label, result in _catalog_chains(rng):
        for j in range(result.depth):
            window = opalg.FockWindow.from_function(result.F(j + 1), N)
            down, up = opalg.annihilator(window), opalg.creator(window)
            bracketed = opalg.quommutator(down, up, result.params[j])
            if not opalg.verify_relation(bracketed, opalg.diag(window, result.f(j))).ok:
                return f"{label}: bracket relation fails at step {j}"
            plain = opalg.commutator(down, up)
            if not opalg.verify_relation(plain, opalg.diag(window, result.f(j + 1))).ok:
                return f"{label}: commutator relation fails at step {j}"
    return None


def _check_simultaneity(rng: random.Random, N: int) -> str | None:
    one = ExpPoly.constant(1)
    for _ in range(3):
        k = rng.randint(2, 4)
        params = _rand_distinct(rng, k)
        full = deform.chain(one, params)
        window = opalg.FockWindow.from_function(full.final_F, N)
        down, up = opalg.annihilator(window), opalg.creator(window)
        for i, q in enumerate(params):
            rest = params[:i] + params[i + 1 :]
            reduced = deform.chain(one, rest)
            got = opalg.quommutator(down, up, q)
            want = opalg.diag(window, reduced.final_f)
            if not opalg.verify_relation(got, want).ok:
                return f"simultaneity fails for {params} at removed {q}"
    return None


def _check_cj_mb_reduction(rng: random.Random) -> str | None:
    for q in (Fraction(2), Fraction(3, 2), _rand_rational(rng, exclude=(1, -1))):
        cj = deform.chakrabarti_jagannathan(q, 1 / q)
        mb = deform.macfarlane_biedenharn(q)
        if cj.final_f != mb.final_f or cj.final_F != mb.final_F:
            return f"two-parameter reduction fails at q={q}"
    return None


def _check_qcv_structure(rng: random.Random, N: int) -> str | None:
    for _ in range(4):
        q = _rand_rational(rng, exclude=(1, -1))
        nu = Fraction(rng.randint(-3, 3), 2)
        alpha, beta, gamma = deform.qcv_defining_relation(nu, q)
        spec = opalg.QuommutatorSpec(alpha, beta, gamma)
        window = opalg.structure_from_quommutator(spec, N)
        commutator_form = deform.qcv(nu, q, 1)
        F_poly = commutator_form.prefix_sum()
        for level in range(N + 1):
            if window.F(level) != F_poly(level):
                return f"defining relation vs bracket closed form at q={q}, nu={nu}, level {level}"
    return None


# -- ordering suite ------------------------------------------------------------


def _classical_stirling(m_max: int) -> dict[tuple[int, int], int]:
    table = {(1, 1): 1}
    for m in range(1, m_max):
        for ell in range(1, m + 2):
            table[(m + 1, ell)] = table.get((m, ell - 1), 0) + ell * table.get((m, ell), 0)
    return table


def _check_stirling_limit(rng: random.Random) -> str | None:
    table = ordering.normal_order_table(ExpPoly.constant(1), 1, 8)
    classical = _classical_stirling(8)
    for m in range(1, 9):
        for ell in range(1, m + 1):
            want = ExpPoly.constant(classical.get((m, ell), 0))
            if table.entry(m, ell) != want:
                return f"Stirling limit fails at (m, l) = ({m}, {ell})"
    return None


def _check_q_stirling_constancy(rng: random.Random) -> str | None:
    q = _rand_rational(rng, exclude=(1,))
    table = ordering.normal_order_table(ExpPoly.constant(1), q, 6)
    reference = {(1, 1): Fraction(1)}
    for m in range(1, 6):
        for ell in range(1, m + 2):
            reference[(m + 1, ell)] = q ** (ell - 1) * reference.get(
                (m, ell - 1), Fraction(0)
            ) + q_integer(q, ell) * reference.get((m, ell), Fraction(0))
    for m in range(1, 7):
        for ell in range(1, m + 1):
            entry = table.entry(m, ell)
            if not entry.is_constant() or entry(0) != reference[(m, ell)]:
                return f"constant-coefficient table fails at q={q}, (m, l)=({m},{ell})"
    return None


def _check_ordering_on_windows(rng: random.Random, N: int) -> str | None:
    cases = [
        ("arik-coon q=2", deform.arik_coon(2)),
        ("mb q=2", deform.macfarlane_biedenharn(2)),
        ("cv nu=1/2", deform.calogero_vasiliev(Fraction(1, 2))),
        (
            "random chain",
            deform.chain(ExpPoly.constant(1), _rand_distinct(rng, 2)),
        ),
    ]
    for label, result in cases:
        j = result.depth - 1
        f, q = result.f(j), result.params[j]
        window = opalg.FockWindow.from_function(result.F(j + 1), N)
        q_table = ordering.normal_order_table(f, q, 4)
        ok, failures = ordering.verify_normal_order(q_table, window)
        if not ok:
            return f"{label}: bracket-table expansion fails at m={failures[0][0]}"
        commutator_window = opalg.FockWindow.from_commutator(result.final_f, N)
        bar_table = ordering.normal_order_table_bar(result.final_f, 4)
        ok, failures = ordering.verify_normal_order(bar_table, commutator_window)
        if not ok:
            return f"{label}: commutator-table expansion fails at m={failures[0][0]}"
    return None


def _check_quadratic_pair(rng: random.Random, N: int) -> str | None:
    q = Fraction(2)
    window = opalg.FockWindow.from_quommutator(ExpPoly.constant(1), q, N)
    down, up = opalg.annihilator(window), opalg.creator(window)
    nn = up * down
    lhs = nn * nn
    bracket_form = (up**2) * (down**2) * q + nn
    if not opalg.verify_relation(lhs, bracket_form).ok:
        return "bracket-presentation square fails"
    exp_q = opalg.diag(window, ExpPoly.exponential(q))
    commutator_form = (up**2) * (down**2) + up * exp_q * down
    if not opalg.verify_relation(lhs, commutator_form).ok:
        return "commutator-presentation square fails"
    identity_rhs = nn * (q - 1) + opalg.identity(window)
    if not opalg.verify_relation(exp_q, identity_rhs).ok:
        return "exponential-of-number identity fails"
    return None


def _check_power_bracket(rng: random.Random, N: int) -> str | None:
    result = deform.chain(ExpPoly.constant(1), _rand_distinct(rng, 2))
    j = result.depth - 1
    f, q = result.f(j), result.params[j]
    window = opalg.FockWindow.from_function(result.F(j + 1), N)
    down, up = opalg.annihilator(window), opalg.creator(window)
    for ell in range(1, 5):
        lhs = opalg.quommutator(down**ell, up, q**ell)
        rhs = opalg.diag(window, ordering.bracket(f, q, ell)) * down ** (ell - 1)
        if not opalg.verify_relation(lhs, rhs).ok:
            return f"power bracket fails at ell={ell}"
    return None


# -- casimir suite --------------------------------------------------------------


def _check_commutator_casimir(rng: random.Random, N: int) -> str | None:
    for label, result in _catalog_chains(rng):
        F = result.final_F
        window = opalg.FockWindow.from_function(F, N)
        C = casimir_mod.casimir_commutator(F, window)
        up, down = opalg.creator(window), opalg.annihilator(window)
        zero = opalg.Operator(window, {})
        if not opalg.verify_relation(opalg.commutator(C, up), zero).ok:
            return f"{label}: Casimir fails to commute with the raising operator"
        if not opalg.verify_relation(opalg.commutator(C, down), zero).ok:
            return f"{label}: Casimir fails to commute with the lowering operator"
        diagonal = C.diagonal()
        if diagonal is None or any(diagonal):
            return f"{label}: Casimir has a nonzero eigenvalue on the window"
    return None


def _check_casimir_chain_relation(rng: random.Random, N: int) -> str | None:
    for _ in range(3):
        k = rng.randint(1, 4)
        params = _rand_distinct(rng, k)
        result = deform.chain(ExpPoly.constant(1), params)
        for j in range(result.depth):
            window = opalg.FockWindow.from_function(result.F(j + 1), N)
            check = casimir_mod.verify_casimir_relation(result, j, window)
            if not check.ok:
                return f"chain {params}: Casimir dressing fails at step {j}"
    return None


# -- inverse suite ---------------------------------------------------------------


def _check_inverse_worked_examples(rng: random.Random) -> str | None:
    q = Fraction(3)
    beta_form = inverse.to_unit_quommutator(ExpPoly.exponential(q), 10)
    if any(v != q for v in beta_form.values):
        return "pure exponential does not give a constant beta"
    p, nu = Fraction(-1), Fraction(1, 2)
    phi_expr = ExpPoly([(1, (1,)), (p, (2 * nu,))])
    form = inverse.to_Q_quommutator(phi_expr, p)
    want = ExpPoly.polynomial([1 + 2 * nu, 1 - p])
    if form.Phi != want:
        return f"parity example gives {form.Phi}"
    a, b = Fraction(2), Fraction(3, 2)
    q1, q2 = Fraction(3), Fraction(1, 2)
    two_exp = ExpPoly([(q1, (a,)), (q2, (b,))])
    form = inverse.to_Q_quommutator(two_exp, q1)
    want = ExpPoly(
        [(q2, (b * (q2 - q1) / (q2 - 1),)), (1, (a + b * (q1 - 1) / (q2 - 1),))]
    )
    if form.Phi != want:
        return "two-exponential closed form mismatch"
    return None


def _check_inverse_round_trip(rng: random.Random, N: int) -> str | None:
    shapes = [
        ExpPoly.exponential(Fraction(5, 2)),
        deform.macfarlane_biedenharn(2).final_f,
        deform.calogero_vasiliev(Fraction(1, 2)).final_f * Fraction(1, 2),
    ]
    for phi_expr in shapes:
        beta_form = inverse.to_unit_quommutator_with_gamma(phi_expr, phi_expr(0), N)
        spec = opalg.QuommutatorSpec(
            1, lambda n, bf=beta_form: bf.beta(n), beta_form.gamma0
        )
        window = opalg.structure_from_quommutator(spec, N)
        partial = phi_expr.prefix_sum()
        for level in range(N):
            if window.F(level) != partial(level):
                return f"round trip fails for {phi_expr} at level {level}"
    return None


def _check_inverse_q_choice(rng: random.Random, N: int) -> str | None:
    one_term = inverse.simplest_Q(ExpPoly.exponential(Fraction(3)))
    if len(one_term) != 1 or one_term[0].Phi != ExpPoly.constant(1):
        return "single exponential should reduce to the unit bracket"
    nu = Fraction(1, 2)
    parity = ExpPoly([(1, (1,)), (-1, (2 * nu,))])
    forms = inverse.simplest_Q(parity)
    want = ExpPoly.polynomial([1 + 2 * nu, 2])
    if forms[0].Q != -1 or forms[0].Phi != want:
        return "parity case should give the anticommutator presentation"
    if inverse.to_Q_quommutator(parity, 1).Phi != parity:
        return "Q = 1 must return the commutator itself"
    params = _rand_distinct(rng, 2)
    result = deform.chain(ExpPoly.constant(1), params)
    window = opalg.FockWindow.from_function(result.final_F, N)
    q_next = _rand_rational(rng, exclude=tuple(params))
    form = inverse.to_Q_quommutator(result.final_f, q_next)
    down, up = opalg.annihilator(window), opalg.creator(window)
    got = opalg.quommutator(down, up, q_next)
    if not opalg.verify_relation(got, opalg.diag(window, form.Phi)).ok:
        return f"bracket presentation fails for chain {params} at Q={q_next}"
    return None


SUITES = {
    "equivalence": [
        ("residue-zero-one-table", lambda rng, N: _check_residue_table(rng)),
        ("homogeneous-vs-partial-fractions", lambda rng, N: _check_homogeneous_partial_fraction(rng)),
        ("closed-form-vs-brute-force", lambda rng, N: _check_recursion_brute_force(rng)),
        ("bracket-commutator-equivalence", _check_step_equivalences),
        ("simultaneous-bracket-relations", _check_simultaneity),
        ("two-parameter-symmetric-reduction", lambda rng, N: _check_cj_mb_reduction(rng)),
        ("parity-graded-bracket-structure", _check_qcv_structure),
    ],
    "ordering": [
        ("classical-stirling-limit", lambda rng, N: _check_stirling_limit(rng)),
        ("constant-coefficient-table", lambda rng, N: _check_q_stirling_constancy(rng)),
        ("normal-order-expansions", _check_ordering_on_windows),
        ("squared-number-operator-pair", _check_quadratic_pair),
        ("power-bracket-identity", _check_power_bracket),
    ],
    "casimir": [
        ("commutator-casimir-centrality", _check_commutator_casimir),
        ("bracket-casimir-dressing", _check_casimir_chain_relation),
    ],
    "inverse": [
        ("worked-presentations", lambda rng, N: _check_inverse_worked_examples(rng)),
        ("unit-bracket-round-trip", _check_inverse_round_trip),
        ("base-killing-choices", _check_inverse_q_choice),
    ],
}

SUITE_NAMES = ("all",) + tuple(SUITES)


def run_suites(names: list[str], seed: int = 0, N: int = 16) -> list[CheckResult]:
    """Run the named suites (or all of them) and collect per-check results."""
    selected = list(SUITES) if "all" in names else names
    results: list[CheckResult] = []
    for suite_name in selected:
        for check_name, check in SUITES[suite_name]:
            rng = random.Random(f"{seed}/{suite_name}/{check_name}")
            try:
                detail = check(rng, N)
            except Exception as exc:  # a raised error is a failed identity
                detail = f"{type(exc).__name__}: {exc}"
            results.append(
                CheckResult(suite_name, check_name, detail is None, detail or "")
            )
    return results
