"""Exact rational scalars, the infinite bound value, and rational sqrt bounds.

Every quantity in this library is either a ``fractions.Fraction`` or the
absorbing infinity ``INF``.  No floats, ever.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union


class Infinity:
    """Absorbing +infinity bound value.  Singleton, compares above every Fraction."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __mul__(self, other):
        return self

    __rmul__ = __mul__

    def __neg__(self):
        raise ArithmeticError("cannot negate INF")

    def __hash__(self):
        return hash("formalballs-INF")


INF = Infinity()

#: A bound is either an exact rational or +infinity.
Bound = Union[Fraction, Infinity]


def is_inf(x: Bound) -> bool:
    return isinstance(x, Infinity)


def bmin(a: Bound, b: Bound) -> Bound:
    if is_inf(a):
        return b
    if is_inf(b):
        return a
    return min(a, b)


def bmax(a: Bound, b: Bound) -> Bound:
    if is_inf(a) or is_inf(b):
        return INF
    return max(a, b)


def half_pow(n: int) -> Fraction:
    """2^-n as an exact rational."""
    if n < 0:
        return Fraction(2 ** (-n))
    return Fraction(1, 2 ** n)


def parse_rational(s) -> Fraction:
    """Parse "p/q" (or a bare integer string / int) into a Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"not a rational: {s!r}")


def parse_bound(s) -> Bound:
    if isinstance(s, str) and s.strip().lower() == "inf":
        return INF
    return parse_rational(s)


def rational_str(x: Bound) -> str:
    """Serialize as "p/q"; INF as "inf"."""
    if is_inf(x):
        return "inf"
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction, max_digits: int = 40) -> str:
    """Decimal rendering when the denominator is 2^a 5^b, else "p/q"."""
    den = x.denominator
    d = den
    twos = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    fives = 0
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return rational_str(x)
    digits = max(twos, fives)
    if digits > max_digits:
        return rational_str(x)
    scaled = x * 10 ** digits
    assert scaled.denominator == 1
    n = scaled.numerator
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    whole, frac = divmod(n, 10 ** digits)
    frac_s = str(frac).rjust(digits, "0").rstrip("0")
    if not frac_s:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac_s}"


def sqrt_upper(x: Fraction, bits: int) -> Fraction:
    """Rational r with r >= sqrt(x) and r - sqrt(x) <= 2^-bits, for x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    # ceil(sqrt(x) * 2^bits) <= isqrt(floor(x * 4^bits)) + 1
    num = x.numerator * scale * scale
    den = x.denominator
    return Fraction(isqrt(num // den) + 1, scale)


def sqrt_lower(x: Fraction, bits: int) -> Fraction:
    """Rational r with 0 <= r <= sqrt(x) and sqrt(x) - r <= 2^-bits."""
    if x < 0:
        raise ValueError("sqrt of negative rational")
    if x == 0:
        return Fraction(0)
    scale = 1 << bits
    num = x.numerator * scale * scale
    den = x.denominator
    return Fraction(isqrt(num // den), scale)
