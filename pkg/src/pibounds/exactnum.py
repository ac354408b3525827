"""Exact numeric substrate: rationals, decimal fixed point, and interval
arithmetic with directed rounding.

Everything here runs on unbounded Python integers.  An ``Interval`` stores its
endpoints as integer mantissas at a decimal scale of ``10**-precision``; every
operation rounds the lower endpoint toward -inf and the upper endpoint toward
+inf, so the exact mathematical result applied to any points of the inputs is
always contained in the output.  That containment guarantee is what turns the
polygon recurrence upstairs into *certified* bounds rather than estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

Rational = Fraction

# Reference digits of pi (12 decimals), exact as a rational.  For tests and
# reports only: bound computations never read this value.
PI_REFERENCE = Rational(3141592653589, 10**12)


class DivisionByZeroInterval(ZeroDivisionError):
    """Raised when an interval divisor encloses zero."""


class NegativeRadicand(ValueError):
    """Raised when taking the square root of an interval with lo < 0."""


class Side(Enum):
    """Certified position of a rational relative to an interval.

    BELOW and ABOVE are certified strict comparisons against the enclosed
    value; WITHIN means the comparison is *not* decided at this precision.
    """

    BELOW = "below"
    WITHIN = "within"
    ABOVE = "above"


def ceil_div(a: int, b: int) -> int:
    """Ceiling division on integers (Python's // already floors)."""
    return -((-a) // b)


def isqrt_ceil(n: int) -> int:
    """Smallest integer r with r*r >= n, for n >= 0."""
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _mantissa_str(m: int, digits: int) -> str:
    sign = "-" if m < 0 else ""
    m = abs(m)
    if digits == 0:
        return f"{sign}{m}"
    whole, frac = divmod(m, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def decimal_str(q: Rational, digits: int, rounding: str = "nearest") -> str:
    """Render a rational as a plain decimal with ``digits`` fractional digits.

    ``rounding`` is one of ``"floor"``, ``"ceil"``, ``"nearest"`` (ties to
    even).  Pure integer arithmetic throughout; binary floating point is never
    involved, so the output is exact and reproducible.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    scaled = q * 10**digits
    n, d = scaled.numerator, scaled.denominator
    if rounding == "floor":
        m = n // d
    elif rounding == "ceil":
        m = ceil_div(n, d)
    elif rounding == "nearest":
        m, r = divmod(n, d)
        if 2 * r > d or (2 * r == d and m % 2):
            m += 1
    else:
        raise ValueError(f"unknown rounding mode {rounding!r}")
    return _mantissa_str(m, digits)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] * 10**-precision with integer mantissas."""

    lo: int
    hi: int
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def lo_rational(self) -> Rational:
        return Rational(self.lo, 10**self.precision)

    @property
    def hi_rational(self) -> Rational:
        return Rational(self.hi, 10**self.precision)

    @property
    def width(self) -> Rational:
        return Rational(self.hi - self.lo, 10**self.precision)

    def midpoint(self) -> Rational:
        return Rational(self.lo + self.hi, 2 * 10**self.precision)

    def contains(self, q: Rational | int) -> bool:
        return self.lo_rational <= q <= self.hi_rational

    def overlaps(self, other: Interval) -> bool:
        return (self.lo_rational <= other.hi_rational
                and other.lo_rational <= self.hi_rational)

    def with_precision(self, precision: int) -> Interval:
        """Re-scale to another decimal precision.

        Scaling up is exact; scaling down rounds outward, so the result always
        contains the original interval.
        """
        if precision >= self.precision:
            f = 10 ** (precision - self.precision)
            return Interval(self.lo * f, self.hi * f, precision)
        f = 10 ** (self.precision - precision)
        return Interval(self.lo // f, ceil_div(self.hi, f), precision)

    def decimal_bounds(self, digits: int | None = None) -> tuple[str, str]:
        """Endpoint decimal strings, outward-rounded to ``digits`` places."""
        if digits is None or digits == self.precision:
            return (_mantissa_str(self.lo, self.precision),
                    _mantissa_str(self.hi, self.precision))
        scaled = self.with_precision(digits)
        return (_mantissa_str(scaled.lo, digits),
                _mantissa_str(scaled.hi, digits))

    def __str__(self) -> str:
        lo_s, hi_s = self.decimal_bounds()
        return f"[{lo_s}, {hi_s}]"


def make_interval(q: Rational | int, precision: int) -> Interval:
    """Tightest interval at the given scale containing the exact rational q."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    q = Rational(q)
    s = 10**precision
    return Interval(q.numerator * s // q.denominator,
                    ceil_div(q.numerator * s, q.denominator),
                    precision)


def _aligned(a: Interval, b: Interval) -> tuple[Interval, Interval, int]:
    p = max(a.precision, b.precision)
    return a.with_precision(p), b.with_precision(p), p


def interval_add(a: Interval, b: Interval) -> Interval:
    a, b, p = _aligned(a, b)
    return Interval(a.lo + b.lo, a.hi + b.hi, p)


def interval_sub(a: Interval, b: Interval) -> Interval:
    a, b, p = _aligned(a, b)
    return Interval(a.lo - b.hi, a.hi - b.lo, p)


def interval_mul(a: Interval, b: Interval) -> Interval:
    a, b, p = _aligned(a, b)
    # mantissa products live at scale 2p; one directed division brings them back
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    s = 10**p
    return Interval(min(products) // s, ceil_div(max(products), s), p)


def interval_div(a: Interval, b: Interval) -> Interval:
    a, b, p = _aligned(a, b)
    if b.lo <= 0 <= b.hi:
        raise DivisionByZeroInterval(f"divisor {b} encloses zero")
    s = 10**p
    quotients_lo = []
    quotients_hi = []
    for x in (a.lo, a.hi):
        for y in (b.lo, b.hi):
            quotients_lo.append(x * s // y)
            quotients_hi.append(ceil_div(x * s, y))
    return Interval(min(quotients_lo), max(quotients_hi), p)


_OPS = {
    "add": interval_add,
    "sub": interval_sub,
    "mul": interval_mul,
    "div": interval_div,
}


def interval_arith(op: str, a: Interval, b: Interval) -> Interval:
    """Dispatch one of the four directed-rounded operations by name."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown interval operation {op!r}") from None
    return fn(a, b)


def interval_sqrt(a: Interval) -> Interval:
    """Certified square root.

    sqrt(m * 10**-p) = sqrt(m * 10**p) * 10**-p, so both endpoints reduce to
    integer square roots with a floor (lower) / ceiling (upper) correction.
    """
    if a.lo < 0:
        raise NegativeRadicand(f"interval {a} has negative lower endpoint")
    s = 10**a.precision
    return Interval(math.isqrt(a.lo * s), isqrt_ceil(a.hi * s), a.precision)


def side_of(q: Rational | int, iv: Interval) -> Side:
    """Certified comparison of an exact rational against an enclosure.

    BELOW means q < every point of iv (hence q is strictly less than whatever
    value iv encloses); ABOVE the mirror image; WITHIN means undecided.
    """
    q = Rational(q)
    if q < iv.lo_rational:
        return Side.BELOW
    if q > iv.hi_rational:
        return Side.ABOVE
    return Side.WITHIN
