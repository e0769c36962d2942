"""Exception types shared across the package."""


class QoscilError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateParameters(QoscilError):
    """Parameters collide (coincident, zero, or unit) where a formula needs them in general position."""


class InvalidParameter(QoscilError):
    """A parameter value is outside the operation's domain (e.g. a zero deformation base)."""


class AlphaVanishes(QoscilError):
    """The left weight function of a three-term relation vanishes at a level the recursion needs."""


class WindowMismatch(QoscilError):
    """Operators built over different Fock windows, or a window too small for the request."""


class PreconditionViolated(QoscilError):
    """An input breaks a documented precondition (e.g. a structure function not normalized at 0)."""


class DivisionByZeroAtLevel(QoscilError):
    """A level-indexed denominator vanished.  Carries the offending level."""

    def __init__(self, level: int, message: str | None = None):
        self.level = level
        super().__init__(message or f"denominator vanishes at level {level}")


class ExprParseError(QoscilError):
    """A textual expression or rational literal could not be parsed."""
