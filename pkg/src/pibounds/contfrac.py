"""Continued fractions of exact rationals and certified rational pi bounds.

Expanding the outward-rounded decimal value of a polygon perimeter and walking
its convergents yields small-denominator fractions that can be *certified*
against the perimeter enclosures: a convergent strictly below the inscribed
perimeter is a proven lower bound for pi, one strictly above the circumscribed
perimeter a proven upper bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import polygon
from .exactnum import Rational, Side, decimal_str, side_of

# optional integer part, optional fraction part, at least one digit, no sign
# or exponent ("3", "3.14", ".5"; not "", ".", "3.", "1e3")
_DECIMAL_RE = re.compile(r"^(\d+)?(?:\.(\d+))?$")


class MalformedDecimal(ValueError):
    """Input string is not a plain decimal literal."""


class NonPositiveValue(ValueError):
    """Value must be strictly positive."""


class NoValidBound(LookupError):
    """No convergent under the denominator cap is certified on the needed side."""


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients [a0; a1, a2, ...] of a finite simple continued fraction."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("continued fraction needs at least one coefficient")
        if self.coeffs[0] < 0 or any(a < 1 for a in self.coeffs[1:]):
            raise ValueError("need a0 >= 0 and a_i >= 1 for i >= 1")

    def __str__(self) -> str:
        head, *tail = self.coeffs
        if not tail:
            return f"[{head}]"
        return f"[{head}; " + ", ".join(str(a) for a in tail) + "]"


@dataclass(frozen=True)
class Convergent:
    value: Rational
    index: int


def parse_decimal(text: str) -> Rational:
    """Exact rational value of a decimal literal (d / 10**m, stored reduced)."""
    m = _DECIMAL_RE.match(text)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise MalformedDecimal(f"not a plain positive decimal: {text!r}")
    whole = int(m.group(1) or 0)
    frac = m.group(2) or ""
    value = Rational(whole * 10**len(frac) + int(frac or 0), 10**len(frac))
    if value <= 0:
        raise NonPositiveValue(f"value must be > 0, got {text!r}")
    return value


def expand(q: Rational) -> ContinuedFraction:
    """Euclidean-algorithm coefficients of a positive rational (raw output,
    no renormalization of a trailing 1)."""
    if q <= 0:
        raise NonPositiveValue(f"can only expand positive rationals, got {q}")
    n, d = q.numerator, q.denominator
    coeffs = []
    while True:
        a, r = divmod(n, d)
        coeffs.append(a)
        if r == 0:
            return ContinuedFraction(tuple(coeffs))
        n, d = d, r


def convergents(cf: ContinuedFraction) -> list[Convergent]:
    """All convergents h_i/k_i via the standard forward recurrence."""
    h_prev, h_prev2 = 1, 0   # h_{-1}, h_{-2}
    k_prev, k_prev2 = 0, 1   # k_{-1}, k_{-2}
    out = []
    for i, a in enumerate(cf.coeffs):
        h = a * h_prev + h_prev2
        k = a * k_prev + k_prev2
        out.append(Convergent(Rational(h, k), i))
        h_prev2, h_prev = h_prev, h
        k_prev2, k_prev = k_prev, k
    return out


def reconstruct(cf: ContinuedFraction) -> Rational:
    """Exact value a0 + 1/(a1 + 1/(...)), folded bottom-up."""
    value = Rational(cf.coeffs[-1])
    for a in reversed(cf.coeffs[:-1]):
        value = a + 1 / value
    return value


# ---------------------------------------------------------------------------
# certified bounds for pi
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCandidate:
    convergent: Convergent
    verdict: Side
    within_cap: bool


@dataclass(frozen=True)
class BoundExpansion:
    """A perimeter's outward decimal, its expansion, and verdicts per convergent."""

    which: str                  # "lower" (c_n) or "upper" (C_n)
    n: int
    digits: int
    decimal: Rational           # the d-digit decimal fed into the expansion
    cf: ContinuedFraction
    candidates: tuple[BoundCandidate, ...]

    @property
    def decimal_text(self) -> str:
        return decimal_str(self.decimal, self.digits,
                           "floor" if self.which == "lower" else "ceil")


@dataclass(frozen=True)
class CertifiedBounds:
    n: int
    den_cap: int
    lower: Rational
    upper: Rational
    lower_expansion: BoundExpansion
    upper_expansion: BoundExpansion


def _expansion(bounds: polygon.PolygonBounds, digits: int, which: str,
               den_cap: int) -> BoundExpansion:
    # round the decimal outward so it stays on the certified side of pi
    if which == "lower":
        enclosure = bounds.lower
        decimal = enclosure.with_precision(digits).lo_rational
    else:
        enclosure = bounds.upper
        decimal = enclosure.with_precision(digits).hi_rational
    cf = expand(decimal)
    candidates = tuple(
        BoundCandidate(conv, side_of(conv.value, enclosure),
                       conv.value.denominator <= den_cap)
        for conv in convergents(cf))
    return BoundExpansion(which=which, n=bounds.n, digits=digits,
                          decimal=decimal, cf=cf, candidates=candidates)


def bound_expansion(k: int, digits: int, which: str, den_cap: int = 0,
                    max_precision: int = polygon.DEFAULT_MAX_PRECISION,
                    ) -> BoundExpansion:
    """Expansion of one perimeter bound after k doublings (see _expansion)."""
    if which not in ("lower", "upper"):
        raise ValueError(f"which must be 'lower' or 'upper', got {which!r}")
    bounds = polygon.bounds_at(k, digits, max_precision)
    return _expansion(bounds, digits, which, den_cap)


def certified_rational_bounds(k: int, digits: int, den_cap: int,
                              max_precision: int = polygon.DEFAULT_MAX_PRECISION,
                              ) -> CertifiedBounds:
    """Best certified rational bracket of pi from the k-th doubling.

    Both perimeter decimals are expanded; the returned lower (upper) bound is
    the largest-denominator convergent under ``den_cap`` certified BELOW the
    inscribed (ABOVE the circumscribed) enclosure.  Convergent denominators
    increase, so the last eligible candidate wins.
    """
    if den_cap < 1:
        raise ValueError("den_cap must be >= 1")
    bounds = polygon.bounds_at(k, digits, max_precision)
    lower_exp = _expansion(bounds, digits, "lower", den_cap)
    upper_exp = _expansion(bounds, digits, "upper", den_cap)

    def pick(exp: BoundExpansion, wanted: Side) -> Rational:
        eligible = [c for c in exp.candidates
                    if c.within_cap and c.verdict is wanted]
        if not eligible:
            raise NoValidBound(
                f"no convergent with denominator <= {den_cap} certified "
                f"{wanted.value} the {exp.which} enclosure at n={exp.n}")
        return eligible[-1].convergent.value

    return CertifiedBounds(n=bounds.n, den_cap=den_cap,
                           lower=pick(lower_exp, Side.BELOW),
                           upper=pick(upper_exp, Side.ABOVE),
                           lower_expansion=lower_exp,
                           upper_expansion=upper_exp)
