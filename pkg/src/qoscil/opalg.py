"""Exact weighted-shift operator algebra on a truncated Fock window.

A window fixes the structure function F: level k -> F(k) with F(0) = 0, the
eigenvalues of a+ a on the number basis.  Operators are kept in the normal
form

    sum_{d >= 0} (a+)^d h_d(n)   +   sum_{d < 0} h_d(n) a^{|d|}

with rational coefficient tables h_d.  Ladder operators are never
materialized as matrices with square-root entries: the rewrite rules

    a a+ -> F(n+1),   a+ a -> F(n),   a h(n) -> h(n+1) a,   h(n) a+ -> a+ h(n+1)

close every product over the rationals, because any matrix element pairs the
square roots up into plain F-values.  Two operators are equal on the window
iff their coefficient tables agree wherever the window determines them: a
degree-d coefficient is compared at arguments 0 .. N-1-|d| so that the
truncation boundary can never fake or mask a discrepancy.

Coefficient tables are tabulated a little past the window (the window's
``coeff_levels``), and F extends on demand when the window was built from a
function or recurrence, so products of the depths used here never run out
of determined entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .errors import AlphaVanishes, WindowMismatch
from .exppoly import ExpPoly
from .rationals import ZERO, RationalLike, rat

LevelFunction = Union[ExpPoly, Callable[[int], Fraction], RationalLike]

_COEFF_PAD = 12


def as_level_function(value: LevelFunction) -> Callable[[int], Fraction]:
    """Coerce a constant, ExpPoly, or callable into a level -> Fraction map."""
    if isinstance(value, ExpPoly):
        return value.__call__
    if callable(value):
        return lambda level: rat(value(level))
    const = rat(value)
    return lambda level: const


class FockWindow:
    """Structure-function values F(0..) over a window of N levels.

    F(m) is defined for every m >= 0 the source can reach (windows built
    from a closed form or recurrence extend on demand); F(m) = 0 for m <= 0.
    On-demand extension is cached without locking: materialize a window
    (e.g. via ``F_values``) before sharing it across threads.
    """

    def __init__(self, values: Sequence[RationalLike], N: int | None = None,
                 next_value: Callable[[int, Fraction], Fraction] | None = None):
        vals = [rat(v) for v in values]
        if not vals or vals[0] != 0:
            raise ValueError("structure function must start with F(0) = 0")
        self.N = N if N is not None else len(vals) - 1
        if self.N < 2:
            raise ValueError("window needs at least 2 levels")
        self._values = vals
        self._next = next_value
        self.coeff_levels = self.N + _COEFF_PAD

    @classmethod
    def from_function(cls, fn: LevelFunction, N: int) -> "FockWindow":
        f = as_level_function(fn)
        window = cls([ZERO], N, next_value=lambda k, _prev: f(k + 1))
        if window.F(0) != 0 or f(0) != 0:
            raise ValueError("structure function must vanish at level 0")
        window.F(N)
        return window

    @classmethod
    def from_recurrence(cls, step: Callable[[int, Fraction], Fraction], N: int) -> "FockWindow":
        """Window with F(k+1) = step(k, F(k)), F(0) = 0."""
        window = cls([ZERO], N, next_value=step)
        window.F(N)
        return window

    @classmethod
    def from_commutator(cls, f: ExpPoly, N: int) -> "FockWindow":
        """Window of the algebra [a, a+] = f(n): F is the partial sum of f."""
        return cls.from_function(f.prefix_sum(), N)

    @classmethod
    def from_quommutator(cls, f: ExpPoly, q: RationalLike, N: int) -> "FockWindow":
        """Window of the algebra a a+ - q a+ a = f(n)."""
        qq = rat(q)
        return cls.from_recurrence(lambda k, Fk: f(k) + qq * Fk, N)

    def F(self, m: int) -> Fraction:
        if m <= 0:
            return ZERO
        while m >= len(self._values):
            if self._next is None:
                raise WindowMismatch(
                    f"window holds F up to level {len(self._values) - 1} and cannot extend"
                )
            k = len(self._values) - 1
            self._values.append(self._next(k, self._values[k]))
        return self._values[m]

    def F_values(self, count: int) -> list[Fraction]:
        return [self.F(m) for m in range(count)]

    @property
    def is_positive(self) -> bool:
        """True when F(k) > 0 for 1 <= k < N (a unitary number representation)."""
        return all(self.F(k) > 0 for k in range(1, self.N))

    def __repr__(self) -> str:
        head = ", ".join(str(v) for v in self.F_values(min(self.N + 1, 8)))
        return f"FockWindow(N={self.N}, F=[{head}, ...])"


@dataclass(frozen=True)
class QuommutatorSpec:
    """Three-term relation a*alpha(n)*a+ - a+*beta(n)*a = gamma(n), with a probe scalar Q."""

    alpha: LevelFunction
    beta: LevelFunction
    gamma: LevelFunction
    Q: Fraction = field(default_factory=lambda: Fraction(1))


def structure_from_quommutator(spec: QuommutatorSpec, N: int) -> FockWindow:
    """Solve the three-term relation for F on a window of N levels.

    F(0) = 0 and F(k+1) = (gamma(k) + beta(k-1) F(k)) / alpha(k+1); the
    beta(-1) factor multiplies F(0) = 0 and is never evaluated.
    """
    alpha = as_level_function(spec.alpha)
    beta = as_level_function(spec.beta)
    gamma = as_level_function(spec.gamma)

    def step(k: int, Fk: Fraction) -> Fraction:
        a_next = alpha(k + 1)
        if a_next == 0:
            raise AlphaVanishes(f"alpha({k + 1}) = 0 blocks the level recursion")
        carry = ZERO if k == 0 else beta(k - 1) * Fk
        return (gamma(k) + carry) / a_next

    return FockWindow.from_recurrence(step, N)


def general_quommutator_rhs(spec: QuommutatorSpec, N: int) -> list[Fraction]:
    """Level values of a a+ - Q a+ a, i.e. F(n+1) - Q F(n), for n < N."""
    window = structure_from_quommutator(spec, N)
    Q = rat(spec.Q)
    return [window.F(n + 1) - Q * window.F(n) for n in range(N)]


# -- operators -----------------------------------------------------------------


class Operator:
    """Normal-form operator over a window; immutable once built.

    ``degrees`` maps a shift degree d to the coefficient table of h_d,
    indexed by the argument of h_d (the level the diagonal factor sees).
    A table shorter than the window's ``coeff_levels`` marks entries the
    truncated data no longer determines; comparisons refuse to read past
    determined entries rather than guessing.
    """

    __slots__ = ("window", "degrees")

    def __init__(self, window: FockWindow, degrees: Mapping[int, Sequence[Fraction]]):
        self.window = window
        cap = window.coeff_levels
        cleaned: dict[int, tuple[Fraction, ...]] = {}
        for d, table in degrees.items():
            t = tuple(table[:cap])
            if len(t) == cap and not any(t):
                continue
            cleaned[d] = t
        self.degrees = cleaned

    def table(self, d: int) -> tuple[Fraction, ...]:
        return self.degrees.get(d, ())

    def _check_window(self, other: "Operator") -> None:
        if self.window is not other.window:
            raise WindowMismatch("operators live on different windows")

    def __add__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        self._check_window(other)
        cap = self.window.coeff_levels
        out: dict[int, tuple[Fraction, ...]] = {}
        for d in set(self.degrees) | set(other.degrees):
            t1 = self.degrees.get(d)
            t2 = other.degrees.get(d)
            if t1 is None:
                out[d] = t2
            elif t2 is None:
                out[d] = t1
            else:
                n = min(len(t1), len(t2))
                out[d] = tuple(t1[i] + t2[i] for i in range(n))
        return Operator(self.window, out)

    def __neg__(self) -> "Operator":
        return Operator(self.window, {d: tuple(-x for x in t) for d, t in self.degrees.items()})

    def __sub__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def scale(self, s: RationalLike) -> "Operator":
        s = rat(s)
        if s == 0:
            return Operator(self.window, {})
        return Operator(self.window, {d: tuple(s * x for x in t) for d, t in self.degrees.items()})

    def __mul__(self, other):
        if isinstance(other, Operator):
            self._check_window(other)
            acc: dict[int, list[Fraction]] = {}
            for d1, t1 in self.degrees.items():
                for d2, t2 in other.degrees.items():
                    d, values = _mul_terms(self.window, d1, t1, d2, t2)
                    _accumulate(acc, d, values)
            return Operator(self.window, {d: tuple(v) for d, v in acc.items()})
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Operator):
            return NotImplemented
        return self.scale(other)

    def __pow__(self, m: int) -> "Operator":
        if m < 0:
            raise ValueError("operator powers must be nonnegative")
        result = identity(self.window)
        for _ in range(m):
            result = result * self
        return result

    def diagonal(self) -> tuple[Fraction, ...] | None:
        """The degree-0 table if the operator is diagonal on the window, else None."""
        for d in self.degrees:
            if d != 0 and any(self.table(d)[: _domain(self.window.N, d)]):
                return None
        table = self.table(0)
        if len(table) < self.window.N:
            table = table + (ZERO,) * (self.window.N - len(table))
        return table[: self.window.N]

    def dump(self) -> list[tuple[int, int, Fraction]]:
        """Determined entries as (degree, level, value), lexicographically."""
        out = []
        for d in sorted(self.degrees):
            t = self.degrees[d]
            for level in range(min(len(t), _domain(self.window.N, d))):
                out.append((d, level, t[level]))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return verify_relation(self, other).ok

    __hash__ = None  # mutable-free but equality is windowed, not structural

    def __repr__(self) -> str:
        degs = ", ".join(str(d) for d in sorted(self.degrees)) or "0"
        return f"Operator(N={self.window.N}, degrees=[{degs}])"


def _domain(N: int, d: int) -> int:
    """Number of argument levels the window fully determines at degree d."""
    return max(N - abs(d), 0)


def _accumulate(acc: dict[int, list[Fraction]], d: int, values: list[Fraction]) -> None:
    if d in acc:
        old = acc[d]
        n = min(len(old), len(values))
        acc[d] = [old[i] + values[i] for i in range(n)]
    else:
        acc[d] = values


def _mul_terms(
    window: FockWindow,
    d1: int,
    h1: tuple[Fraction, ...],
    d2: int,
    h2: tuple[Fraction, ...],
) -> tuple[int, list[Fraction]]:
    """Normal-form product of single-degree terms; see the module notes.

    Every balanced pair of ladder factors contracts to F-values: the output
    coefficient table is rational and as long as the inputs determine it.
    """
    F = window.F
    cap = window.coeff_levels
    L1, L2 = len(h1), len(h2)
    d = d1 + d2
    if d1 >= 0 and d2 >= 0:
        L = min(L2, L1 - d2)
        return d, [h1[i + d2] * h2[i] for i in range(max(L, 0))]
    if d1 < 0 and d2 < 0:
        e1 = -d1
        L = min(L1, L2 - e1)
        return d, [h1[i] * h2[i + e1] for i in range(max(L, 0))]
    if d1 >= 0 and d2 < 0:
        e2 = -d2
        Lg = min(L1, L2)
        lower = min(d1, e2)  # this many a...a+ pairs contract below the argument
        L = min(Lg + lower, cap)
        values = []
        for i in range(max(L, 0)):
            if i < lower:
                values.append(ZERO)
            else:
                weight = Fraction(1)
                for t in range(lower):
                    weight *= F(i - t)
                values.append(weight * h1[i - lower] * h2[i - lower])
        return d, values
    # d1 < 0 <= d2: the inner a ... a+ pairs contract to F above the argument
    e1 = -d1
    if d >= 0:
        L = min(L2, L1 - d)
        values = []
        for i in range(max(L, 0)):
            weight = Fraction(1)
            for t in range(1, e1 + 1):
                weight *= F(i + d + t)
            values.append(h1[i + d] * weight * h2[i])
        return d, values
    e = e1 - d2
    L = min(L1, L2 - e)
    values = []
    for i in range(max(L, 0)):
        weight = Fraction(1)
        for t in range(1, d2 + 1):
            weight *= F(i + e + t)
        values.append(h1[i] * weight * h2[i + e])
    return d, values


# -- constructors --------------------------------------------------------------


def diag(window: FockWindow, h: LevelFunction) -> Operator:
    fn = as_level_function(h)
    return Operator(window, {0: tuple(fn(i) for i in range(window.coeff_levels))})


def identity(window: FockWindow) -> Operator:
    return diag(window, 1)


def number_operator(window: FockWindow) -> Operator:
    return diag(window, lambda level: Fraction(level))


def creator(window: FockWindow) -> Operator:
    return Operator(window, {1: (Fraction(1),) * window.coeff_levels})


def annihilator(window: FockWindow) -> Operator:
    return Operator(window, {-1: (Fraction(1),) * window.coeff_levels})


def commutator(A: Operator, B: Operator) -> Operator:
    return A * B - B * A


def quommutator(A: Operator, B: Operator, Q: RationalLike) -> Operator:
    return A * B - (B * A).scale(Q)


def anticommutator(A: Operator, B: Operator) -> Operator:
    return A * B + B * A


# -- verification ---------------------------------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an exact window comparison; carries the first discrepancy."""

    ok: bool
    discrepancy: tuple[int, int, Fraction, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_relation(lhs: Operator, rhs: Operator) -> VerifyReport:
    """Exact equality on every window-determined coefficient entry.

    The discrepancy, if any, is reported as (degree, level, lhs, rhs).
    """
    if lhs.window is not rhs.window:
        raise WindowMismatch("cannot compare operators over different windows")
    N = lhs.window.N
    for d in sorted(set(lhs.degrees) | set(rhs.degrees)):
        needed = _domain(N, d)
        if needed == 0:
            continue
        lt, rt = lhs.table(d), rhs.table(d)
        lt_known = len(lt) if d in lhs.degrees else needed
        rt_known = len(rt) if d in rhs.degrees else needed
        if lt_known < needed or rt_known < needed:
            raise WindowMismatch(
                f"degree {d} coefficients undetermined before level {needed}"
            )
        for level in range(needed):
            lv = lt[level] if level < len(lt) else ZERO
            rv = rt[level] if level < len(rt) else ZERO
            if lv != rv:
                return VerifyReport(False, (d, level, lv, rv))
    return VerifyReport(True)
