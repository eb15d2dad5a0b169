"""Exact arithmetic and a calculator for gross-numbers: values with finite,
infinite and infinitesimal parts written positionally in base G1 (①), the
infinite unit defined as the number of elements of the set of natural
numbers."""

from .core import (
    DEFAULT_DIV_TERMS,
    DivResult,
    GROSSONE,
    GrossNumber,
    GrossTerm,
    NumClass,
    ONE,
    Parity,
    Rational,
    ZERO,
    add,
    as_gross,
    as_int,
    as_rational,
    classify,
    compare,
    divide,
    exact_divide,
    finite_part,
    from_int,
    from_rational,
    has_infinite_part,
    has_infinitesimal_part,
    is_integer_like,
    monomial,
    multiply,
    negate,
    normalize,
    parity,
    power_gross,
    power_int,
    reciprocal,
    scalar_mul,
    sign,
    subtract,
)
from .errors import GrossoneError
from .numio import parse_expression, parse_number, parse_statement, print_canonical

__all__ = [
    "DEFAULT_DIV_TERMS",
    "DivResult",
    "GROSSONE",
    "GrossNumber",
    "GrossTerm",
    "GrossoneError",
    "NumClass",
    "ONE",
    "Parity",
    "Rational",
    "ZERO",
    "add",
    "as_gross",
    "as_int",
    "as_rational",
    "classify",
    "compare",
    "divide",
    "exact_divide",
    "finite_part",
    "from_int",
    "from_rational",
    "has_infinite_part",
    "has_infinitesimal_part",
    "is_integer_like",
    "monomial",
    "multiply",
    "negate",
    "normalize",
    "parity",
    "parse_expression",
    "parse_number",
    "parse_statement",
    "power_gross",
    "power_int",
    "print_canonical",
    "reciprocal",
    "scalar_mul",
    "sign",
    "subtract",
]

__version__ = "0.1.0"
