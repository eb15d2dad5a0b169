"""Exception hierarchy shared by all grossone modules.

Everything raised on purpose derives from GrossoneError so callers (and the
CLI) can separate domain errors from genuine bugs.
"""

from __future__ import annotations


class GrossoneError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- arithmetic


class DivisionByZero(GrossoneError, ZeroDivisionError):
    pass


class InexactDivision(GrossoneError):
    """Exact division was requested but a nonzero remainder survived the
    term budget."""


class NegativePowerOfNonMonomial(GrossoneError):
    """Negative integer powers are only defined for single-term numbers;
    everything else must go through division."""


class ZeroToNonpositivePower(GrossoneError):
    pass


class UnsupportedExponentiation(GrossoneError):
    """The base/exponent combination has no representation in the numeral
    system (for example a finite base other than 0 or 1 raised to an
    infinite power)."""


class ParityUndefined(GrossoneError):
    """Raised for numbers with infinitesimal parts or a non-integer finite
    part, which have no even/odd classification."""


# ------------------------------------------------------------------- parsing


class ParseError(GrossoneError):
    """Malformed input text; carries a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownCharacter(ParseError):
    pass


class DepthLimitExceeded(ParseError):
    """Exponent braces nested deeper than the configured cap."""


# ---------------------------------------------------------------- evaluation


class EvalError(GrossoneError):
    pass


class UnboundName(EvalError):
    def __init__(self, name: str):
        super().__init__(f"unbound name {name}")
        self.name = name


class NoBranchMatched(EvalError):
    pass


# ----------------------------------------------------------------- summation


class UnsupportedSummand(GrossoneError):
    """The summand has no polynomial closed form in the index variable, so
    it cannot be summed up to an infinite item count."""


# ------------------------------------------------------------------ set calc


class NotAMember(GrossoneError):
    pass


class AlreadyMember(GrossoneError):
    pass


class NotASubset(GrossoneError):
    pass


class InvalidProgression(GrossoneError):
    pass


class InvalidModel(GrossoneError):
    pass
