"""Command-line front end.

Subcommands: chain, family, verify, normal-order, inverse, casimir, qderiv.
Output formats: text (default), json, csv.  The window size defaults to 16
and can be overridden by -N/--window or the QOSCIL_WINDOW environment
variable.  Exit codes: 0 success, 1 identity failure, 2 parse error,
3 degenerate or invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import casimir as casimir_mod
from . import deform, inverse, opalg, ordering, qcalc
from .errors import ExprParseError, QoscilError
from .exppoly import ExpPoly
from .rationals import format_rational, parse_rational
from .serialize import chain_to_wire, exppoly_to_wire, parse_exppoly
from .suites import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_DEGENERATE = 3


@dataclass
class Output:
    payload: dict
    text: str
    rows: tuple[list[str], list[list[str]]] | None = None
    exit_code: int = EXIT_OK


def _default_window() -> int:
    env = os.environ.get("QOSCIL_WINDOW")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ExprParseError(f"QOSCIL_WINDOW must be an integer, got {env!r}")
        if value < 2:
            raise ExprParseError("QOSCIL_WINDOW must be at least 2")
        return value
    return 16


def _parse_params(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def _values_row(f: ExpPoly, levels: int) -> list[str]:
    return [format_rational(f(n)) for n in range(levels)]


def _chain_output(result: deform.DeformationChain, levels: int) -> Output:
    payload = chain_to_wire(result)
    payload["levels"] = levels
    payload["tables"] = {"f_0": _values_row(result.f0, levels)}
    lines = [f"f_0 = {result.f0}", "  values: " + ", ".join(payload["tables"]["f_0"])]
    header = ["series", "closed form"] + [f"n={n}" for n in range(levels)]
    rows = [["f_0", str(result.f0)] + payload["tables"]["f_0"]]
    for j in range(1, result.depth + 1):
        Fj, fj = result.F(j), result.f(j)
        for tag, series in ((f"F_{j}", Fj), (f"f_{j}", fj)):
            values = _values_row(series, levels)
            payload["tables"][tag] = values
            lines.append(f"{tag} = {series}")
            lines.append("  values: " + ", ".join(values))
            rows.append([tag, str(series)] + values)
    return Output(payload, "\n".join(lines), (header, rows))


def cmd_chain(args) -> Output:
    start = parse_exppoly(args.start, args.q)
    result = deform.chain(start, _parse_params(args.params))
    return _chain_output(result, args.levels)


def cmd_family(args) -> Output:
    name = args.name
    if name == "qcv":
        if args.nu is None or args.q is None or args.Q is None:
            raise ExprParseError("qcv needs --nu, --q and --Q")
        bracket_form = deform.qcv(args.nu, args.q, args.Q, args.sign)
        values = _values_row(bracket_form, args.levels)
        payload = {
            "name": name,
            "bracket": exppoly_to_wire(bracket_form),
            "values": values,
        }
        text = f"bracket rhs = {bracket_form}\n  values: " + ", ".join(values)
        header = ["series", "closed form"] + [f"n={n}" for n in range(args.levels)]
        return Output(payload, text, (header, [["rhs", str(bracket_form)] + values]))
    if name == "arik-coon":
        if args.q is None:
            raise ExprParseError("arik-coon needs --q")
        result = deform.arik_coon(args.q)
    elif name == "mb":
        if args.q is None:
            raise ExprParseError("mb needs --q")
        result = deform.macfarlane_biedenharn(args.q)
    elif name == "cj":
        if args.q1 is None or args.q2 is None:
            raise ExprParseError("cj needs --q1 and --q2")
        result = deform.chakrabarti_jagannathan(args.q1, args.q2)
    elif name == "cv":
        if args.nu is None:
            raise ExprParseError("cv needs --nu")
        result = deform.calogero_vasiliev(args.nu)
    elif name == "bem":
        if args.nu is None or args.q is None:
            raise ExprParseError("bem needs --nu and --q")
        result = deform.bem(args.nu, args.q)
    else:
        raise ExprParseError(f"unknown family {name!r}")
    out = _chain_output(result, args.levels)
    out.payload["name"] = name
    return out


def cmd_verify(args) -> Output:
    results = run_suites([args.suite], seed=args.seed, N=args.window)
    rows = []
    lines = []
    n_failed = 0
    for item in sorted(results, key=lambda r: (r.suite, r.name)):
        status = "PASS" if item.ok else "FAIL"
        if not item.ok:
            n_failed += 1
        lines.append(
            f"{status}  {item.suite}/{item.name}" + (f"  ({item.detail})" if item.detail else "")
        )
        rows.append([item.suite, item.name, status, item.detail])
    lines.append(
        f"{len(results) - n_failed}/{len(results)} identities hold exactly"
        + (f"; {n_failed} FAILED" if n_failed else "")
    )
    payload = {
        "suite": args.suite,
        "seed": args.seed,
        "N": args.window,
        "results": [
            {"suite": r.suite, "check": r.name, "ok": r.ok, "detail": r.detail}
            for r in results
        ],
        "failed": n_failed,
    }
    return Output(
        payload,
        "\n".join(lines),
        (["suite", "check", "status", "detail"], rows),
        EXIT_IDENTITY_FAILURE if n_failed else EXIT_OK,
    )


def cmd_normal_order(args) -> Output:
    f = parse_exppoly(args.f, args.q)
    if args.bar:
        table = ordering.normal_order_table_bar(f, args.m)
    else:
        if args.q is None:
            raise ExprParseError("the bracket table needs --q (or pass --bar)")
        table = ordering.normal_order_table(f, args.q, args.m)
    entries = []
    lines = [f"variant: {table.variant}, f = {f}"
             + (f", q = {format_rational(table.q)}" if table.q is not None else "")]
    rows = []
    for m in range(1, table.m_max + 1):
        cells = []
        for ell in range(1, m + 1):
            entry = table.entry(m, ell)
            entries.append({"m": m, "ell": ell, "coeff": exppoly_to_wire(entry)})
            rows.append([str(m), str(ell), str(entry)])
            cells.append(f"C[{m},{ell}] = {entry}")
        lines.append("   ".join(cells))
    payload = {
        "variant": table.variant,
        "f": exppoly_to_wire(f),
        "q": format_rational(table.q) if table.q is not None else None,
        "m_max": table.m_max,
        "entries": entries,
    }
    return Output(payload, "\n".join(lines), (["m", "ell", "coefficient"], rows))


def cmd_inverse(args) -> Output:
    phi_expr = parse_exppoly(args.phi, args.q)
    if args.unit:
        form = inverse.to_unit_quommutator(phi_expr, args.window)
        values = [format_rational(v) for v in form.values]
        payload = {
            "mode": "unit",
            "beta_numerator": exppoly_to_wire(form.numerator),
            "beta_denominator": exppoly_to_wire(form.denominator),
            "beta_values": values,
        }
        text = (
            f"beta = ({form.numerator}) / ({form.denominator})\n"
            "  values: " + ", ".join(values)
        )
        rows = [[str(n), v] for n, v in enumerate(values)]
        return Output(payload, text, (["n", "beta(n)"], rows))
    if args.auto:
        forms = inverse.simplest_Q(phi_expr)
        candidates = [
            {"Q": format_rational(f.Q), "Phi": exppoly_to_wire(f.Phi), "terms": f.Phi.term_count()}
            for f in forms
        ]
        lines = [
            f"Q = {format_rational(f.Q)}, Phi = {f.Phi}  [{f.Phi.term_count()} term(s)]"
            for f in forms
        ]
        rows = [[format_rational(f.Q), str(f.Phi), str(f.Phi.term_count())] for f in forms]
        return Output({"mode": "auto", "candidates": candidates}, "\n".join(lines),
                      (["Q", "Phi", "terms"], rows))
    if args.Q is None:
        raise ExprParseError("inverse needs one of --Q, --auto, --unit")
    form = inverse.to_Q_quommutator(phi_expr, args.Q)
    payload = {"mode": "Q", "Q": format_rational(form.Q), "Phi": exppoly_to_wire(form.Phi)}
    text = f"Q = {format_rational(form.Q)}, Phi = {form.Phi}"
    return Output(payload, text, (["Q", "Phi"], [[format_rational(form.Q), str(form.Phi)]]))


def cmd_casimir(args) -> Output:
    f = parse_exppoly(args.f, args.q)
    if args.q is None:
        raise ExprParseError("casimir needs --q (the bracket parameter)")
    q = args.q
    pair = casimir_mod.casimir_quommutator(f, q)
    F_next, _ = deform.minimal_deform(f, q)
    window = opalg.FockWindow.from_quommutator(f, q, args.window)
    up, down = opalg.creator(window), opalg.annihilator(window)
    tilde = pair.operator(window)
    zero = opalg.Operator(window, {})
    checks = {
        "mu_equals_nu_times_structure": pair.mu == pair.nu * F_next,
        "mu_recurrence": pair.mu - pair.mu.shift(-1) == pair.nu * f.shift(-1),
        "nu_recurrence": pair.nu == pair.nu.shift(-1) * (Fraction(1) / q),
        "commutes_with_raising": opalg.verify_relation(opalg.commutator(tilde, up), zero).ok,
        "commutes_with_lowering": opalg.verify_relation(opalg.commutator(tilde, down), zero).ok,
        "fock_eigenvalues_zero": (lambda d: d is not None and not any(d))(tilde.diagonal()),
    }
    payload = {
        "mu": exppoly_to_wire(pair.mu),
        "nu": exppoly_to_wire(pair.nu),
        "q": format_rational(pair.q),
        "checks": checks,
        "operator": [
            [d, level, format_rational(v)] for d, level, v in tilde.dump()
        ],
    }
    lines = [f"mu = {pair.mu}", f"nu = {pair.nu}"]
    rows = [["mu", str(pair.mu)], ["nu", str(pair.nu)]]
    for key, ok in checks.items():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {key}")
        rows.append([key, "PASS" if ok else "FAIL"])
    exit_code = EXIT_OK if all(checks.values()) else EXIT_IDENTITY_FAILURE
    if args.casimir_value is not None:
        spectrum = casimir_mod.non_fock_spectrum(F_next, args.casimir_value, args.window)
        payload["candidate_spectrum"] = [format_rational(v) for v in spectrum]
        lines.append(
            "candidate spectrum at Casimir value "
            f"{format_rational(args.casimir_value)}: "
            + ", ".join(format_rational(v) for v in spectrum)
        )
    return Output(payload, "\n".join(lines), (["item", "value"], rows), exit_code)


def cmd_qderiv(args) -> Output:
    coeffs = [parse_rational(c) for c in args.coeffs.split(",") if c.strip()]
    params = _parse_params(args.params)
    if len(params) == 1:
        derived = qcalc.jackson_derivative(params[0], coeffs)
    else:
        derived = qcalc.multi_q_derivative(params, coeffs)
    payload = {
        "params": [format_rational(p) for p in params],
        "input": [format_rational(c) for c in coeffs],
        "derivative": [format_rational(c) for c in derived],
    }
    text = "derivative coefficients: " + (
        ", ".join(payload["derivative"]) if derived else "0"
    )
    rows = [[str(i), format_rational(c)] for i, c in enumerate(derived)]
    return Output(payload, text, (["power", "coefficient"], rows))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qoscil",
        description="Exact closed forms and identity checks for deformed oscillator algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        p.add_argument(
            "-N", "--window", type=int, default=None,
            help="Fock window size (default 16, or QOSCIL_WINDOW)",
        )

    p = sub.add_parser("chain", help="run the deformation recursion from a start expression")
    p.add_argument("--start", required=True, help="starting closed form, e.g. '1' or '2n+2'")
    p.add_argument("--params", required=True, help="comma-separated rationals q1,q2,...")
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--q", type=parse_rational, default=None, help="binds the letter q in --start")
    common(p)
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("family", help="build a named oscillator family")
    p.add_argument("--name", required=True, choices=sorted(deform.FAMILIES))
    p.add_argument("--q", type=parse_rational, default=None)
    p.add_argument("--q1", type=parse_rational, default=None)
    p.add_argument("--q2", type=parse_rational, default=None)
    p.add_argument("--nu", type=parse_rational, default=None)
    p.add_argument("--Q", type=parse_rational, default=None)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.add_argument("--levels", type=int, default=8)
    common(p)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("verify", help="run the exact identity batteries")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("normal-order", help="deformed Stirling coefficient table")
    p.add_argument("--f", required=True, help="structure function closed form")
    p.add_argument("--q", type=parse_rational, default=None)
    p.add_argument("--m", type=int, default=6)
    p.add_argument("--bar", action="store_true", help="use the plain-commutator recurrence")
    common(p)
    p.set_defaults(handler=cmd_normal_order)

    p = sub.add_parser("inverse", help="rewrite a commutator as a simpler bracket relation")
    p.add_argument("--phi", required=True)
    p.add_argument("--q", type=parse_rational, default=None, help="binds the letter q in --phi")
    p.add_argument("--Q", type=parse_rational, default=None)
    p.add_argument("--auto", action="store_true", help="rank all base-killing choices of Q")
    p.add_argument("--unit", action="store_true", help="solve for beta with unit right-hand side")
    common(p)
    p.set_defaults(handler=cmd_inverse)

    p = sub.add_parser("casimir", help="bracket-algebra Casimir closed forms and verdicts")
    p.add_argument("--f", required=True, help="structure function closed form")
    p.add_argument("--q", type=parse_rational, default=None)
    p.add_argument("--casimir-value", type=parse_rational, default=None,
                   help="tabulate the candidate non-Fock spectrum for this Casimir eigenvalue")
    common(p)
    p.set_defaults(handler=cmd_casimir)

    p = sub.add_parser("qderiv", help="Jackson / multi-base derivative of a polynomial")
    p.add_argument("--coeffs", required=True, help="comma-separated coefficients, lowest first")
    p.add_argument("--params", required=True, help="comma-separated bases")
    common(p)
    p.set_defaults(handler=cmd_qderiv)

    return parser


def _render(out: Output, fmt: str, destination) -> None:
    if fmt == "json":
        destination.write(json.dumps(out.payload, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        if out.rows is None:
            raise ExprParseError("this command has no tabular form")
        header, rows = out.rows
        writer = csv.writer(destination)
        writer.writerow(header)
        writer.writerows(rows)
    else:
        destination.write(out.text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.window is None:
            args.window = _default_window()
        elif args.window < 2:
            raise ExprParseError("window must be at least 2")
        out: Output = args.handler(args)
        if args.output:
            with open(args.output, "w", newline="") as fh:
                _render(out, args.format, fh)
        else:
            _render(out, args.format, sys.stdout)
        return out.exit_code
    except ExprParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except QoscilError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
