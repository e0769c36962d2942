"""Wire formats and the small textual grammar used by the CLI.

JSON schema for a closed form: rationals travel as strings so arbitrary
precision survives serialization.

    {"poly": ["c0", "c1", ...],
     "exp":  [{"base": "p/q", "poly": ["c0", ...]}, ...]}

"poly" holds the base-1 (purely polynomial) part; each "exp" entry is one
exponential term with its own polynomial prefactor.  A deformation chain is

    {"start": <expjson>, "params": ["p/q", ...],
     "steps": [{"F": <expjson>, "f": <expjson>}, ...]}

The flag grammar accepts sums of simple terms: rational constants,
polynomial pieces like ``2n`` or ``3n^2``, and exponentials ``B^n`` whose
base is a nonnegative integer, a parenthesized rational (``(-1)``,
``(1/2)``), or the letter ``q`` bound by the command's --q flag, with an
optional rational coefficient, e.g. ``1 + 2*(-1)^n`` or ``2n+2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .deform import DeformationChain
from .errors import ExprParseError
from .exppoly import ExpPoly
from .rationals import format_rational, parse_rational

__all__ = [
    "exppoly_to_wire",
    "exppoly_from_wire",
    "chain_to_wire",
    "chain_from_wire",
    "parse_exppoly",
]


def exppoly_to_wire(f: ExpPoly) -> dict:
    poly: list[str] = []
    exp: list[dict] = []
    for base, coeffs in f.terms:
        encoded = [format_rational(c) for c in coeffs]
        if base == 1:
            poly = encoded
        else:
            exp.append({"base": format_rational(base), "poly": encoded})
    return {"poly": poly, "exp": exp}


def exppoly_from_wire(data: dict) -> ExpPoly:
    try:
        terms = [(Fraction(1), [parse_rational(c) for c in data.get("poly", [])])]
        for entry in data.get("exp", []):
            terms.append(
                (parse_rational(entry["base"]), [parse_rational(c) for c in entry["poly"]])
            )
    except (KeyError, TypeError) as exc:
        raise ExprParseError(f"malformed closed-form record: {exc}") from exc
    return ExpPoly(terms)


def chain_to_wire(c: DeformationChain) -> dict:
    return {
        "start": exppoly_to_wire(c.f0),
        "params": [format_rational(p) for p in c.params],
        "steps": [
            {"F": exppoly_to_wire(F), "f": exppoly_to_wire(f)} for F, f in c.steps
        ],
    }


def chain_from_wire(data: dict) -> DeformationChain:
    try:
        f0 = exppoly_from_wire(data["start"])
        params = tuple(parse_rational(p) for p in data["params"])
        steps = tuple(
            (exppoly_from_wire(step["F"]), exppoly_from_wire(step["f"]))
            for step in data["steps"]
        )
    except (KeyError, TypeError) as exc:
        raise ExprParseError(f"malformed chain record: {exc}") from exc
    return DeformationChain(f0, params, steps)


_RAT = r"\d+(?:/\d+)?"
_COEF = rf"(?P<coef>\((?:-?{_RAT})\)|-?{_RAT})"
_BASE = rf"(?P<base>q|{_RAT}|\((?:-?{_RAT})\))"
_TERM = re.compile(
    rf"^{_COEF}?(?P<star>\*)?(?:(?P<exp>{_BASE}\^n)|(?P<poly>n(?:\^(?P<power>\d+))?))?$"
)


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split on top-level + and -, keeping signs; parentheses are opaque."""
    terms: list[tuple[int, str]] = []
    sign, depth, current = 1, 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExprParseError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in "+-" and current.strip():
            terms.append((sign, current.strip()))
            sign, current = (1 if ch == "+" else -1), ""
            continue
        if depth == 0 and ch in "+-" and not current.strip():
            # sign gluing onto the upcoming term, e.g. a leading minus
            sign *= 1 if ch == "+" else -1
            continue
        current += ch
    if depth != 0:
        raise ExprParseError(f"unbalanced parentheses in {text!r}")
    if current.strip():
        terms.append((sign, current.strip()))
    return terms


def parse_exppoly(text: str, q: Fraction | None = None) -> ExpPoly:
    """Parse the flag grammar into a closed form; ``q`` binds the letter q."""
    stripped = text.replace(" ", "")
    if not stripped:
        raise ExprParseError("empty expression")
    terms = []
    for sign, chunk in _split_terms(stripped):
        match = _TERM.match(chunk)
        if not match:
            raise ExprParseError(f"cannot parse term {chunk!r}")
        if match.group("star") and not (match.group("exp") or match.group("poly")):
            raise ExprParseError(f"dangling '*' in term {chunk!r}")
        coef_text = match.group("coef")
        coef = parse_rational(coef_text.strip("()")) if coef_text else Fraction(1)
        coef *= sign
        if match.group("exp"):
            base_text = match.group("base")
            if base_text == "q":
                if q is None:
                    raise ExprParseError("expression uses q but no --q value was given")
                base = q
            else:
                base = parse_rational(base_text.strip("()"))
            if base == 0:
                raise ExprParseError("exponential base must be nonzero")
            terms.append((base, (coef,)))
        elif match.group("poly"):
            power = int(match.group("power") or 1)
            terms.append((Fraction(1), (Fraction(0),) * power + (coef,)))
        else:
            if coef_text is None:
                raise ExprParseError(f"cannot parse term {chunk!r}")
            terms.append((Fraction(1), (coef,)))
    return ExpPoly(terms)
