"""Exact arithmetic for gross-numbers.

A gross-number is a finite sum of terms ``c * G1^p`` where G1 (written ① in
print) is the infinite unit: the number of elements of the set of natural
numbers.  Coefficients (grossdigits) are exact rationals; exponents
(grosspowers) are themselves gross-numbers, so values such as
``17.21*G1^{52.4*G1 - 72.1}`` are first-class.  The canonical form keeps
exponents strictly decreasing, drops zero coefficients, and represents zero
as the empty sum; structural equality of canonical forms is numeric
equality.

The ordering is dominance order: the term with the largest grosspower
decides the sign, so every infinite number exceeds every finite one, which
in turn exceeds every infinitesimal, which is still strictly positive when
its leading coefficient is.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Tuple, Union

from .errors import (
    DivisionByZero,
    InexactDivision,
    NegativePowerOfNonMonomial,
    ParityUndefined,
    UnsupportedExponentiation,
    ZeroToNonpositivePower,
)

# Grossdigits are exact arbitrary-precision rationals; the stdlib Fraction
# already maintains gcd(|num|, den) = 1, den > 0 and zero as 0/1.
Rational = Fraction

RationalLike = Union[int, Fraction]
GrossLike = Union["GrossNumber", int, Fraction]

#: Term budget used by exact_divide / ``/`` when none is given explicitly.
DEFAULT_DIV_TERMS = 20


class NumClass(Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    FINITE_NONZERO = "FiniteNonzero"
    INFINITE = "Infinite"


class Parity(Enum):
    EVEN = "Even"
    ODD = "Odd"


_ZERO_FRACTION = Fraction(0)


class GrossTerm(NamedTuple):
    """One addend ``coefficient * G1^exponent``; the coefficient is never 0."""

    coefficient: Fraction
    exponent: "GrossNumber"


@dataclass(frozen=True, eq=False)
class GrossNumber:
    """Canonical gross-number: terms sorted by strictly decreasing exponent."""

    terms: Tuple[GrossTerm, ...] = ()

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GrossNumber):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == as_gross(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        # Cached: values are immutable and get hashed heavily as exponent
        # keys.  Purely finite values hash like their rational value so
        # that x == 5 implies hash(x) == hash(5).
        try:
            return self._hash
        except AttributeError:
            pass
        if not self.terms:
            h = hash(0)
        elif len(self.terms) == 1 and not self.terms[0].exponent.terms:
            h = hash(self.terms[0].coefficient)
        else:
            h = hash(self.terms)
        object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other: GrossLike) -> bool:
        return compare(self, as_gross(other)) < 0

    def __le__(self, other: GrossLike) -> bool:
        return compare(self, as_gross(other)) <= 0

    def __gt__(self, other: GrossLike) -> bool:
        return compare(self, as_gross(other)) > 0

    def __ge__(self, other: GrossLike) -> bool:
        return compare(self, as_gross(other)) >= 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other: GrossLike) -> "GrossNumber":
        return add(self, as_gross(other))

    __radd__ = __add__

    def __sub__(self, other: GrossLike) -> "GrossNumber":
        return subtract(self, as_gross(other))

    def __rsub__(self, other: GrossLike) -> "GrossNumber":
        return subtract(as_gross(other), self)

    def __neg__(self) -> "GrossNumber":
        return negate(self)

    def __pos__(self) -> "GrossNumber":
        return self

    def __mul__(self, other: GrossLike) -> "GrossNumber":
        return multiply(self, as_gross(other))

    __rmul__ = __mul__

    def __truediv__(self, other: GrossLike) -> "GrossNumber":
        return exact_divide(self, as_gross(other))

    def __rtruediv__(self, other: GrossLike) -> "GrossNumber":
        return exact_divide(as_gross(other), self)

    def __pow__(self, exponent: GrossLike) -> "GrossNumber":
        if isinstance(exponent, int):
            return power_int(self, exponent)
        return power_gross(self, as_gross(exponent))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        from .numio import print_canonical  # deferred: numio imports core

        return print_canonical(self)

    __str__ = __repr__


ZERO = GrossNumber()
ONE = GrossNumber((GrossTerm(Fraction(1), ZERO),))
GROSSONE = GrossNumber((GrossTerm(Fraction(1), ONE),))


def from_rational(value: RationalLike) -> GrossNumber:
    """Embed a rational as a purely finite gross-number (a single G1^0 term)."""
    q = Fraction(value)
    if q == 0:
        return ZERO
    return GrossNumber((GrossTerm(q, ZERO),))


def from_int(value: int) -> GrossNumber:
    return from_rational(Fraction(value))


def as_gross(value: GrossLike) -> GrossNumber:
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return from_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a gross-number")


def monomial(coefficient: RationalLike, exponent: GrossLike) -> GrossNumber:
    """Single-term gross-number ``coefficient * G1^exponent``."""
    c = Fraction(coefficient)
    if c == 0:
        return ZERO
    return GrossNumber((GrossTerm(c, as_gross(exponent)),))


# --------------------------------------------------------------- structure


def _sorted_terms(merged: dict[GrossNumber, Fraction]) -> GrossNumber:
    kept = [(p, c) for p, c in merged.items() if c.numerator]
    kept.sort(key=cmp_to_key(_compare_exponent_pairs), reverse=True)
    return GrossNumber(tuple(GrossTerm(c, p) for p, c in kept))


def _compare_exponent_pairs(a, b):
    return compare(a[0], b[0])


def normalize(terms: Iterable[Tuple[RationalLike, GrossNumber]]) -> GrossNumber:
    """Canonicalize ``(coefficient, exponent)`` pairs.

    Merges equal exponents by summing coefficients, drops zeros and sorts
    exponents strictly decreasing.  Idempotent; exponents must already be
    canonical.
    """
    merged: dict[GrossNumber, Fraction] = {}
    for coefficient, exponent in terms:
        c = coefficient if type(coefficient) is Fraction else Fraction(coefficient)
        previous = merged.get(exponent)
        merged[exponent] = c if previous is None else previous + c
    return _sorted_terms(merged)


def sign(x: GrossNumber) -> int:
    """Sign of the leading (largest-exponent) coefficient; 0 for zero."""
    if not x.terms:
        return 0
    return 1 if x.terms[0].coefficient.numerator > 0 else -1


def compare(x: GrossNumber, y: GrossNumber) -> int:
    """Dominance-order comparison; equals sign(x - y).

    Coefficient comparisons run on raw numerators/denominators (the
    denominator is always positive) to stay off the slow generic
    rational-comparison path.
    """
    if x is y:
        return 0
    xt, yt = x.terms, y.terms
    # fast path: both sides purely finite (the common case for exponents)
    if (not xt or (len(xt) == 1 and not xt[0].exponent.terms)) and (
        not yt or (len(yt) == 1 and not yt[0].exponent.terms)
    ):
        a = xt[0].coefficient if xt else _ZERO_FRACTION
        b = yt[0].coefficient if yt else _ZERO_FRACTION
        lhs = a.numerator * b.denominator
        rhs = b.numerator * a.denominator
        return 0 if lhs == rhs else (1 if lhs > rhs else -1)
    i, j = 0, 0
    nx, ny = len(xt), len(yt)
    while True:
        if i >= nx and j >= ny:
            return 0
        if i >= nx:
            return -1 if yt[j].coefficient.numerator > 0 else 1
        if j >= ny:
            return 1 if xt[i].coefficient.numerator > 0 else -1
        tx, ty = xt[i], yt[j]
        c = compare(tx.exponent, ty.exponent)
        if c > 0:
            return 1 if tx.coefficient.numerator > 0 else -1
        if c < 0:
            return -1 if ty.coefficient.numerator > 0 else 1
        a, b = tx.coefficient, ty.coefficient
        if a.numerator != b.numerator or a.denominator != b.denominator:
            lhs = a.numerator * b.denominator
            rhs = b.numerator * a.denominator
            return 1 if lhs > rhs else -1
        i += 1
        j += 1


# --------------------------------------------------------------- arithmetic


def add(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    """Exact termwise merge of two canonical operands."""
    xt, yt = x.terms, y.terms
    if not xt:
        return y
    if not yt:
        return x
    out: list[GrossTerm] = []
    i, j = 0, 0
    nx, ny = len(xt), len(yt)
    while i < nx and j < ny:
        tx, ty = xt[i], yt[j]
        c = compare(tx.exponent, ty.exponent)
        if c > 0:
            out.append(tx)
            i += 1
        elif c < 0:
            out.append(ty)
            j += 1
        else:
            merged = tx.coefficient + ty.coefficient
            if merged:
                out.append(GrossTerm(merged, tx.exponent))
            i += 1
            j += 1
    out.extend(xt[i:])
    out.extend(yt[j:])
    return GrossNumber(tuple(out))


def negate(x: GrossNumber) -> GrossNumber:
    return GrossNumber(tuple(GrossTerm(-t.coefficient, t.exponent) for t in x.terms))


def subtract(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    return add(x, negate(y))


def multiply(x: GrossNumber, y: GrossNumber) -> GrossNumber:
    """Exact convolution: every term pair multiplies coefficients and adds
    exponents, then like exponents merge."""
    if not x.terms or not y.terms:
        return ZERO
    merged: dict[GrossNumber, Fraction] = {}
    for tx in x.terms:
        cx, px = tx
        for ty in y.terms:
            exponent = add(px, ty.exponent)
            c = cx * ty.coefficient
            previous = merged.get(exponent)
            merged[exponent] = c if previous is None else previous + c
    return _sorted_terms(merged)


def scalar_mul(q: RationalLike, x: GrossNumber) -> GrossNumber:
    c = Fraction(q)
    if c == 0:
        return ZERO
    return GrossNumber(tuple(GrossTerm(c * t.coefficient, t.exponent) for t in x.terms))


def power_int(x: GrossNumber, n: int) -> GrossNumber:
    """Integer power; ``n < 0`` only for single-term numbers."""
    if n == 0:
        if not x.terms:
            raise ZeroToNonpositivePower("0 cannot be raised to the power 0")
        return ONE
    if n < 0:
        if not x.terms:
            raise ZeroToNonpositivePower("0 cannot be raised to a negative power")
        if len(x.terms) != 1:
            raise NegativePowerOfNonMonomial(
                "negative powers need a single-term number; use division instead"
            )
        term = x.terms[0]
        inverse = GrossNumber((GrossTerm(1 / term.coefficient, negate(term.exponent)),))
        return power_int(inverse, -n)
    result = ONE
    base = x
    while n:
        if n & 1:
            result = multiply(result, base)
        base = multiply(base, base) if n > 1 else base
        n >>= 1
    return result


def as_int(x: GrossNumber) -> int | None:
    """The value as a machine integer when x is purely finite and integral."""
    if not x.terms:
        return 0
    if len(x.terms) == 1 and not x.terms[0].exponent.terms:
        c = x.terms[0].coefficient
        if c.denominator == 1:
            return c.numerator
    return None


def as_rational(x: GrossNumber) -> Fraction | None:
    """The value as a Fraction when x is purely finite, else None."""
    if not x.terms:
        return Fraction(0)
    if len(x.terms) == 1 and not x.terms[0].exponent.terms:
        return x.terms[0].coefficient
    return None


def power_gross(x: GrossNumber, k: GrossNumber) -> GrossNumber:
    """Raise x to a gross-number power.

    Supported: any x with a finite integer k (delegates to power_int);
    0^k for k > 0; 1^k; and (G1^p)^k = G1^{p*k} for coefficient-1
    single-term bases.  Anything else (such as 2^G1) has no representation
    here and raises UnsupportedExponentiation.
    """
    n = as_int(k)
    if n is not None:
        return power_int(x, n)
    if not x.terms:
        if sign(k) > 0:
            return ZERO
        raise ZeroToNonpositivePower("0 cannot be raised to a non-positive power")
    if x == ONE:
        return ONE
    if len(x.terms) == 1 and x.terms[0].coefficient == 1:
        return GrossNumber((GrossTerm(Fraction(1), multiply(x.terms[0].exponent, k)),))
    raise UnsupportedExponentiation(
        f"cannot represent ({x!r})^({k!r}) as a finite positional numeral"
    )


# ----------------------------------------------------------------- division


@dataclass(frozen=True)
class DivResult:
    """Outcome of truncated long division: dividend = quotient*divisor + remainder."""

    quotient: GrossNumber
    remainder: GrossNumber
    exact: bool
    terms_emitted: int


def divide(x: GrossNumber, y: GrossNumber, max_terms: int = DEFAULT_DIV_TERMS) -> DivResult:
    """Leading-term long division with an explicit term budget.

    Quotient terms come out in strictly decreasing exponent order until the
    remainder vanishes or ``max_terms`` terms have been emitted.  The
    identity ``x == quotient * y + remainder`` always holds exactly.
    """
    if not y.terms:
        raise DivisionByZero("division by zero")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    lead = y.terms[0]
    quotient_terms: list[GrossTerm] = []
    remainder = x
    while remainder.terms and len(quotient_terms) < max_terms:
        top = remainder.terms[0]
        q_coeff = top.coefficient / lead.coefficient
        q_exp = subtract(top.exponent, lead.exponent)
        quotient_terms.append(GrossTerm(q_coeff, q_exp))
        step = GrossNumber((GrossTerm(q_coeff, q_exp),))
        remainder = subtract(remainder, multiply(step, y))
    quotient = GrossNumber(tuple(quotient_terms))
    return DivResult(quotient, remainder, exact=not remainder.terms, terms_emitted=len(quotient_terms))


def exact_divide(x: GrossNumber, y: GrossNumber, max_terms: int = DEFAULT_DIV_TERMS) -> GrossNumber:
    result = divide(x, y, max_terms)
    if not result.exact:
        raise InexactDivision(
            f"({x!r}) / ({y!r}) leaves remainder {result.remainder!r} "
            f"after {result.terms_emitted} quotient terms"
        )
    return result.quotient


def reciprocal(x: GrossNumber, max_terms: int = DEFAULT_DIV_TERMS) -> DivResult:
    return divide(ONE, x, max_terms)


# ----------------------------------------------------------- classification


def classify(x: GrossNumber) -> NumClass:
    """Class of the leading exponent: empty sum is ZERO, negative leading
    exponent INFINITESIMAL, zero FINITE_NONZERO, positive INFINITE."""
    if not x.terms:
        return NumClass.ZERO
    s = sign(x.terms[0].exponent)
    if s < 0:
        return NumClass.INFINITESIMAL
    if s == 0:
        return NumClass.FINITE_NONZERO
    return NumClass.INFINITE


def finite_part(x: GrossNumber) -> GrossNumber:
    """The G1^0 term as a pure finite number, or 0 when absent."""
    for term in x.terms:
        if not term.exponent.terms:
            return from_rational(term.coefficient)
    return ZERO


def has_infinite_part(x: GrossNumber) -> bool:
    return bool(x.terms) and sign(x.terms[0].exponent) > 0


def has_infinitesimal_part(x: GrossNumber) -> bool:
    return bool(x.terms) and sign(x.terms[-1].exponent) < 0


def is_integer_like(x: GrossNumber) -> bool:
    """True when x has a parity, i.e. behaves as an integer.

    Requires an integer finite part and no infinitesimal part.  Terms with
    positive grosspowers count as integers whatever their rational
    coefficient: G1 is divisible by every finite natural, so G1/2, 2*G1/3
    and so on are integers of the extended system.
    """
    for term in x.terms:
        s = sign(term.exponent)
        if s < 0:
            return False
        if s == 0 and term.coefficient.denominator != 1:
            return False
    return True


def parity(x: GrossNumber) -> Parity:
    """Even/odd classification of an integer-like gross-number.

    Every term with a positive grosspower is even (such terms are integer
    multiples of all finite naturals), so parity is decided by the integer
    finite part alone.
    """
    finite_coeff = Fraction(0)
    for term in x.terms:
        s = sign(term.exponent)
        if s < 0:
            raise ParityUndefined(f"{x!r} has an infinitesimal part")
        if s == 0:
            if term.coefficient.denominator != 1:
                raise ParityUndefined(f"{x!r} has a non-integer finite part")
            finite_coeff = term.coefficient
    return Parity.EVEN if finite_coeff % 2 == 0 else Parity.ODD
