"""Acceptance suite: the seven exit criteria, one test (and one printed
pass/fail line) per criterion.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

from __future__ import annotations

import csv
import io
import json
import random
import subprocess
import sys
from fractions import Fraction

from pibounds.contfrac import certified_rational_bounds, convergents, expand, reconstruct
from pibounds.exactnum import (
    PI_REFERENCE,
    Side,
    interval_arith,
    make_interval,
    side_of,
)
from pibounds.polygon import bounds_at, eval_radical, nested_radical_form
from pibounds.series import evaluate_series

TABLE_8DIGIT = {
    3: ("2.59807621", "5.19615242"),
    6: ("3.00000000", "3.46410161"),
    12: ("3.10582854", "3.21539031"),
    24: ("3.13262861", "3.15965994"),
    48: ("3.13935020", "3.14608622"),
    96: ("3.14103195", "3.14271460"),
}


def as_fraction(decimal: str) -> Fraction:
    whole, _, frac = decimal.partition(".")
    return Fraction(int(whole + frac), 10 ** len(frac))


def contains_within(iv, decimal: str, tol_digits: int) -> bool:
    v = as_fraction(decimal)
    tol = Fraction(1, 10**tol_digits)
    return iv.lo_rational - tol <= v <= iv.hi_rational + tol


def report(n: int, text: str) -> None:
    print(f"criterion {n}: PASS - {text}")


def test_criterion_1_table_reproduction():
    checks = 0
    for k, (n, (c_dec, t_dec)) in enumerate(sorted(TABLE_8DIGIT.items())):
        bounds = bounds_at(k, 10)
        assert bounds.n == n
        assert contains_within(bounds.lower, c_dec, 8), (n, "c")
        assert contains_within(bounds.upper, t_dec, 8), (n, "C")
        checks += 2
    assert checks == 12
    report(1, "all 12 eight-decimal table entries contained within 1e-8")


def test_criterion_2_deep_doubling():
    bounds = bounds_at(13, 12)
    assert bounds.n == 24576
    assert contains_within(bounds.lower, "3.141592645034", 12)
    assert contains_within(bounds.upper, "3.141592670702", 12)
    report(2, "n=24576 enclosures contain the 12-decimal values within 1e-12")


def test_criterion_3_archimedes_bounds_certified():
    bounds = bounds_at(5, 8)
    assert side_of(Fraction(223, 71), bounds.lower) is Side.BELOW
    assert side_of(Fraction(22, 7), bounds.upper) is Side.ABOVE
    assert Fraction(31408, 10**4) < bounds.lower.lo_rational
    assert bounds.upper.hi_rational < Fraction(31428, 10**4)
    report(3, "223/71 < c_96 and C_96 < 22/7 certified; range (3.1408, 3.1428) holds")


def test_criterion_4_improved_bound():
    result = certified_rational_bounds(5, 8, 100)
    assert (result.lower, result.upper) == (Fraction(245, 78), Fraction(22, 7))
    report(4, "certified_rational_bounds(5, 8, 100) == (245/78, 22/7)")


def test_criterion_5_continued_fraction_goldens():
    cf = expand(Fraction(157, 50))
    assert cf.coeffs == (3, 7, 7)
    assert [c.value for c in convergents(cf)] == \
        [Fraction(3), Fraction(22, 7), Fraction(157, 50)]

    cf = expand(Fraction(314103195, 10**8))
    assert cf.coeffs == (3, 7, 11, 25, 1, 25, 1, 27, 13)
    assert [c.value for c in convergents(cf)][:4] == \
        [Fraction(3), Fraction(22, 7), Fraction(245, 78), Fraction(6147, 1957)]

    values = [c.value for c in convergents(expand(Fraction(314159267, 10**8)))]
    assert Fraction(333, 106) in values and Fraction(355, 113) in values
    report(5, "expansions of 157/50, the 8-digit c_96 and 3.14159267 all match")


def test_criterion_6_property_suites():
    # (a) roundtrip identity on 1000 random positive rationals
    rng = random.Random(1771)
    for _ in range(1000):
        q = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**9))
        assert reconstruct(expand(q)) == q

    # (b) interval containment vs the exact rational oracle, 1000 triples
    ops = ("add", "sub", "mul", "div")
    done = 0
    while done < 1000:
        q1 = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        q2 = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        p = rng.randint(1, 20)
        op = ops[done % 4]
        a, b = make_interval(q1, p), make_interval(q2, p)
        if op == "div" and b.lo <= 0 <= b.hi:
            continue
        exact = {"add": lambda: q1 + q2, "sub": lambda: q1 - q2,
                 "mul": lambda: q1 * q2, "div": lambda: q1 / q2}[op]()
        out = interval_arith(op, a, b)
        assert out.lo_rational <= exact <= out.hi_rational
        done += 1

    # (c) monotone, two-sided enclosures for k = 0..10 at d = 15
    ladder = [bounds_at(k, 15) for k in range(12)]
    for bounds in ladder[:11]:
        assert bounds.lower.lo_rational <= PI_REFERENCE <= bounds.upper.hi_rational
    for prev, cur in zip(ladder, ladder[1:11]):
        assert prev.lower.hi_rational < cur.lower.lo_rational
        assert prev.upper.lo_rational > cur.upper.hi_rational

    # (d) width ratio ~ 4 (quadratic convergence) for k = 3..10
    for k in range(3, 11):
        gap_k = ladder[k].upper.midpoint() - ladder[k].lower.midpoint()
        gap_next = ladder[k + 1].upper.midpoint() - ladder[k + 1].lower.midpoint()
        assert Fraction(39, 10) <= gap_k / gap_next <= Fraction(41, 10)

    # (e) closed forms overlap the recurrence for every table row
    for k, n in enumerate((3, 6, 12, 24, 48, 96)):
        assert eval_radical(nested_radical_form(n, "c"), 12).overlaps(ladder[k].lower)
        assert eval_radical(nested_radical_form(n, "C"), 12).overlaps(ladder[k].upper)

    # (f) nested-fraction truncation equals the shifted alternating sum
    for d in range(0, 21):
        assert (evaluate_series("brouncker", d, 8).estimate
                == evaluate_series("leibniz", d + 1, 8).estimate)

    # (g) alternating bracketing and monotone-from-below, N <= 50
    prev_wallis = None
    for n in range(1, 51):
        leibniz = evaluate_series("leibniz", n, 8).estimate
        assert (leibniz > PI_REFERENCE) if n % 2 else (leibniz < PI_REFERENCE)
        wallis = evaluate_series("wallis", n, 8).estimate
        assert wallis < PI_REFERENCE
        if prev_wallis is not None:
            assert wallis > prev_wallis
        prev_wallis = wallis

    report(6, "property suites (a)-(g) all hold")


def test_criterion_7_cli_determinism_and_format_fidelity():
    def run(*argv: str) -> bytes:
        proc = subprocess.run([sys.executable, "-m", "pibounds", *argv],
                              capture_output=True, check=True)
        return proc.stdout

    table_args = ("table", "--max-doublings", "5", "--digits", "8")
    first, second = run(*table_args), run(*table_args)
    assert first == second

    text_out = first.decode()
    csv_rows = list(csv.DictReader(io.StringIO(
        run(*table_args, "--format", "csv").decode())))
    json_rows = json.loads(run(*table_args, "--format", "json"))["rows"]
    assert len(csv_rows) == len(json_rows) == 6
    for crow, jrow in zip(csv_rows, json_rows):
        for key in ("n", "c_form", "c_lo", "c_hi", "C_form", "C_lo", "C_hi"):
            assert crow[key] == str(jrow[key])
        assert crow["c_lo"] in text_out and crow["c_hi"] in text_out
        assert crow["C_lo"] in text_out and crow["C_hi"] in text_out
    report(7, "byte-identical reruns; text/csv/json agree digit for digit")
