"""Tour of the exact interval substrate.

Every quantity in this package is an enclosure: a pair of decimal fixed-point
endpoints, maintained with directed rounding so the true value can never
escape.  This script shows the primitive operations and what "certified"
means in practice.
"""

from fractions import Fraction

from pibounds import Side, interval_arith, interval_sqrt, make_interval, side_of

# A rational that fits the scale exactly keeps zero width; one that does not
# is bracketed by the two nearest grid points.
print("exact:     1/2 at 5 digits  ->", make_interval(Fraction(1, 2), 5))
print("rounded:   1/3 at 5 digits  ->", make_interval(Fraction(1, 3), 5))
print("rounded:  22/7 at 6 digits  ->", make_interval(Fraction(22, 7), 6))
print()

# Arithmetic rounds the lower endpoint down and the upper endpoint up.
a = make_interval(Fraction(1, 3), 8)
b = make_interval(Fraction(1, 7), 8)
print("1/3 + 1/7 ->", interval_arith("add", a, b), "(true value 10/21 = 0.47619047...)")
print("1/3 * 1/7 ->", interval_arith("mul", a, b), "(true value 1/21  = 0.04761904...)")
print()

# Square roots reduce to integer square roots of the scaled mantissas.
two = make_interval(Fraction(2), 20)
print("sqrt(2)  ->", interval_sqrt(two))
print("sqrt(3/4)->", interval_sqrt(make_interval(Fraction(3, 4), 20)),
      " (this is sin 60)")
print()

# side_of is the certified comparator: BELOW/ABOVE are proofs, WITHIN means
# "not decided at this precision" -- never a wrong answer, possibly a shrug.
enc = interval_sqrt(two)
for q in (Fraction(7, 5), Fraction(3, 2), Fraction(141421356, 10**8)):
    print(f"side_of({q}, sqrt(2) enclosure) = {side_of(q, enc).value}")

assert side_of(Fraction(7, 5), enc) is Side.BELOW
assert side_of(Fraction(3, 2), enc) is Side.ABOVE
