"""Archimedean polygon doubling with certified enclosures.

For a circle of unit diameter the inscribed and circumscribed regular n-gons
have perimeters

    c_n = n * sin(180/n),        C_n = n * tan(180/n),

and c_n < pi < C_n.  Restricting to n = 3 * 2**k, every needed cosine follows
from cos(60 deg) = 1/2 through the half-angle identity

    cos(x) = sqrt((1 + cos(2x)) / 2),

so the whole ladder runs on certified square roots alone.  No numeric angle is
ever stored: an angle exists only as the label 180/n, because writing it in
radians would smuggle in the very constant we are bounding.

Sines are propagated with sin(x/2) = sin(x) / (2 cos(x/2)), which is exact and
free of the cancellation that makes sqrt(1 - cos^2) collapse as cos -> 1.  The
direct form is kept as `sine_from_cosine` for cross-checking at small depth.

The module also builds and evaluates the nested-radical closed forms
n * sqrt(2 - sqrt(2 + ... sqrt(3)))/2 that the doubling produces for each n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import (
    Interval,
    Rational,
    interval_add,
    interval_div,
    interval_mul,
    interval_sqrt,
    interval_sub,
    make_interval,
)

DEFAULT_MAX_PRECISION = 10000

_SQRT = "√"   # square-root sign
_MINUS = "−"  # true minus sign
_DOT = "·"    # multiplication dot


class PrecisionExhausted(ArithmeticError):
    """An intermediate enclosure degenerated (e.g. a cosine bound hit zero)."""


class ResourceLimit(RuntimeError):
    """Precision escalation exceeded the configured maximum."""


class UnsupportedSideCount(ValueError):
    """Side count is not of the form 3 * 2**k."""


def _doubling_index(n: int) -> int:
    if n >= 3 and n % 3 == 0:
        m = n // 3
        if m & (m - 1) == 0:
            return m.bit_length() - 1
    raise UnsupportedSideCount(f"side count must be 3 * 2**k, got {n}")


@dataclass(frozen=True)
class AngleState:
    """Certified cos/sin enclosures for the half-angle 180/n, n = 3 * 2**k."""

    k: int
    n: int
    cos_enc: Interval
    sin_enc: Interval
    precision: int


@dataclass(frozen=True)
class PolygonBounds:
    """Enclosures of the inscribed (lower) and circumscribed (upper) perimeters."""

    n: int
    lower: Interval
    upper: Interval


def seed_state(precision: int) -> AngleState:
    """Starting triangle: cos(60 deg) = 1/2 exactly, sin(60 deg) = sqrt(3)/2."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    cos_enc = make_interval(Rational(1, 2), precision)
    sin_enc = interval_sqrt(make_interval(Rational(3, 4), precision))
    return AngleState(k=0, n=3, cos_enc=cos_enc, sin_enc=sin_enc,
                      precision=precision)


def halve_angle(state: AngleState) -> AngleState:
    """One doubling step n -> 2n via the half-angle identity."""
    p = state.precision
    one = make_interval(1, p)
    two = make_interval(2, p)
    cos_half = interval_sqrt(
        interval_div(interval_add(one, state.cos_enc), two))
    if cos_half.lo <= 0:
        raise PrecisionExhausted(
            f"cosine enclosure degenerated at n={2 * state.n}, precision={p}")
    sin_half = interval_div(state.sin_enc, interval_mul(two, cos_half))
    if sin_half.lo <= 0:
        raise PrecisionExhausted(
            f"sine enclosure degenerated at n={2 * state.n}, precision={p}")
    return AngleState(k=state.k + 1, n=2 * state.n, cos_enc=cos_half,
                      sin_enc=sin_half, precision=p)


def sine_from_cosine(cos_enc: Interval) -> Interval:
    """sin = sqrt(1 - cos^2): the direct identity, kept as a cross-check.

    Not used in the ladder itself because of cancellation widening when
    cos -> 1; see the module docstring.
    """
    one = make_interval(1, cos_enc.precision)
    return interval_sqrt(interval_sub(one, interval_mul(cos_enc, cos_enc)))


def perimeters(state: AngleState) -> PolygonBounds:
    """c_n = n sin(180/n) and C_n = n tan(180/n), with tan taken as sin/cos."""
    if state.cos_enc.lo <= 0:
        raise PrecisionExhausted(
            f"cosine enclosure contains zero at n={state.n}")
    n_iv = make_interval(state.n, state.precision)
    lower = interval_mul(n_iv, state.sin_enc)
    upper = interval_div(lower, state.cos_enc)
    return PolygonBounds(n=state.n, lower=lower, upper=upper)


def bounds_at(k: int, digits: int,
              max_precision: int = DEFAULT_MAX_PRECISION) -> PolygonBounds:
    """Certified perimeter bounds after k doublings, both with width < 10**-digits.

    Working precision starts at digits + 10 + k guard digits and doubles on
    failure, recomputing from the seed each time (the ladder is cheap).
    """
    if k < 0:
        raise ValueError("doubling count must be >= 0")
    if digits < 1:
        raise ValueError("digits must be >= 1")
    precision = digits + 10 + k
    while True:
        if precision > max_precision:
            raise ResourceLimit(
                f"needed precision exceeds max_precision={max_precision}")
        try:
            state = seed_state(precision)
            for _ in range(k):
                state = halve_angle(state)
            bounds = perimeters(state)
        except PrecisionExhausted:
            precision *= 2
            continue
        limit = 10 ** (precision - digits)
        if (bounds.lower.hi - bounds.lower.lo < limit
                and bounds.upper.hi - bounds.upper.lo < limit):
            return bounds
        precision *= 2


# ---------------------------------------------------------------------------
# nested-radical closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Radical:
    """One node of a radical tower: the sqrt(3) leaf, or sqrt(2 +/- child).

    ``sign`` is "+" or "-" for a sqrt(2 +/- child) node and None for the leaf.
    """

    sign: str | None = None
    child: Radical | None = None

    def __post_init__(self) -> None:
        if self.sign is None:
            if self.child is not None:
                raise ValueError("leaf node cannot have a child")
        elif self.sign not in ("+", "-") or self.child is None:
            raise ValueError("inner node needs sign '+'/'-' and a child")


@dataclass(frozen=True)
class RadicalExpr:
    """multiplier * numerator / denominator, all parts exact.

    ``numerator`` is a radical tower or None (meaning 1); ``denominator`` is
    the integer 1 or 2, or a sqrt(2 + ...) tower.
    """

    multiplier: int
    numerator: Radical | None
    denominator: Radical | int

    def render(self) -> str:
        parts = [str(self.multiplier)]
        if self.numerator is not None:
            if self.numerator.sign is not None:
                parts.append(_DOT)
            parts.append(_render_tree(self.numerator))
        if isinstance(self.denominator, Radical):
            parts.append("/" + _render_tree(self.denominator))
        elif self.denominator != 1:
            parts.append("/" + str(self.denominator))
        return "".join(parts)


def _render_tree(r: Radical) -> str:
    if r.sign is None:
        return _SQRT + "3"
    op = "+" if r.sign == "+" else _MINUS
    return f"{_SQRT}(2{op}{_render_tree(r.child)})"


def parse_radical_expr(text: str) -> RadicalExpr:
    """Inverse of RadicalExpr.render (ASCII '-' accepted for the minus sign)."""
    pos = 0

    def error(msg: str) -> ValueError:
        return ValueError(f"cannot parse radical expression {text!r}: {msg}")

    def parse_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise error(f"expected digits at position {start}")
        return int(text[start:pos])

    def parse_tree() -> Radical:
        nonlocal pos
        if not text.startswith(_SQRT, pos):
            raise error(f"expected {_SQRT} at position {pos}")
        pos += 1
        if text.startswith("3", pos):
            pos += 1
            return Radical()
        if not text.startswith("(2", pos):
            raise error(f"expected '(2' at position {pos}")
        pos += 2
        if pos >= len(text) or text[pos] not in ("+", "-", _MINUS):
            raise error(f"expected sign at position {pos}")
        sign = "+" if text[pos] == "+" else "-"
        pos += 1
        child = parse_tree()
        if not text.startswith(")", pos):
            raise error(f"expected ')' at position {pos}")
        pos += 1
        return Radical(sign, child)

    multiplier = parse_int()
    numerator = None
    if text.startswith(_DOT, pos):
        pos += 1
        numerator = parse_tree()
    elif text.startswith(_SQRT, pos):
        numerator = parse_tree()
    denominator: Radical | int = 1
    if text.startswith("/", pos):
        pos += 1
        if text.startswith(_SQRT, pos):
            denominator = parse_tree()
        else:
            denominator = parse_int()
    if pos != len(text):
        raise error(f"trailing characters at position {pos}")
    return RadicalExpr(multiplier, numerator, denominator)


def nested_radical_form(n: int, which: str) -> RadicalExpr:
    """Closed form of c_n ("c") or C_n ("C") for n = 3 * 2**k.

    The tower pattern starts at n = 12; the n = 3 and n = 6 rows are the fixed
    literals 3*sqrt(3)/2, 3*sqrt(3), 3, 2*sqrt(3).
    """
    if which not in ("c", "C"):
        raise ValueError(f"which must be 'c' or 'C', got {which!r}")
    k = _doubling_index(n)
    if k == 0:
        if which == "c":
            return RadicalExpr(3, Radical(), 2)      # 3*sqrt(3)/2
        return RadicalExpr(3, Radical(), 1)          # 3*sqrt(3)
    if k == 1:
        if which == "c":
            return RadicalExpr(3, None, 1)           # 3
        return RadicalExpr(2, Radical(), 1)          # 2*sqrt(3)
    inner = Radical()
    for _ in range(k - 2):
        inner = Radical("+", inner)
    if which == "c":
        return RadicalExpr(n, Radical("-", inner), 2)
    return RadicalExpr(n, Radical("-", inner), Radical("+", inner))


def _eval_tree(r: Radical, precision: int) -> Interval:
    if r.sign is None:
        return interval_sqrt(make_interval(3, precision))
    child = _eval_tree(r.child, precision)
    two = make_interval(2, precision)
    inner = (interval_add(two, child) if r.sign == "+"
             else interval_sub(two, child))
    return interval_sqrt(inner)


def eval_radical(expr: RadicalExpr, precision: int) -> Interval:
    """Certified enclosure of a radical expression's value."""
    value = make_interval(expr.multiplier, precision)
    if expr.numerator is not None:
        value = interval_mul(value, _eval_tree(expr.numerator, precision))
    if isinstance(expr.denominator, Radical):
        value = interval_div(value, _eval_tree(expr.denominator, precision))
    elif expr.denominator != 1:
        value = interval_div(value, make_interval(expr.denominator, precision))
    return value
