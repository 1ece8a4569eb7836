"""Exact real arithmetic: every readout carries a proven error bound.

A real is a function from a precision level n to a rational within 2^-n of
the value.  Addition shifts the precision request; multiplication demands a
certified a-priori bound and refuses to proceed without one.
"""

from fractions import Fraction

from formalballs import (
    BoundViolation,
    add_r,
    modulus_c,
    complex_of_rational,
    mul_c,
    mul_r,
    real_of_rational,
)
from formalballs.numbers import decimal_str


def show(label, point, bits=30):
    value = point.approx(bits)
    print(f"  {label} = {decimal_str(value)} ± 2^-{bits}")


third = real_of_rational(Fraction(1, 3))
print("three thirds sum exactly to one:")
show("1/3 + 1/3 + 1/3", add_r(third, add_r(third, third)))

print("\nmultiplication needs a bound certificate:")
x = real_of_rational(Fraction(3, 2))
show("(3/2)^2 with bound 2", mul_r(x, x, 2))
try:
    mul_r(real_of_rational(5), real_of_rational(1), 2)
except BoundViolation as exc:
    print(f"  5 * 1 with bound 2 is refused: {exc}")

print("\ncomplex arithmetic and the modulus as an upper real:")
i = complex_of_rational(0, 1)
re, im = mul_c(i, i, 2).approx(30)
print(f"  i*i = {decimal_str(re)} + {decimal_str(im)}i (both ± 2^-30)")
z = complex_of_rational(3, 4)
m = modulus_c(z)
print(f"  |3+4i| < 5.01 ?  {m.less_than(Fraction(501, 100), 8).label}")
print(f"  |3+4i| < 4.99 ?  {m.less_than(Fraction(499, 100), 64).label}")
print("  (the second stays NotYet forever: 5 is the true value)")
