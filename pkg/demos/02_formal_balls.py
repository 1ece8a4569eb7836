"""Formal balls: finite unions of (center, radius) pairs as open regions.

Diameters are upper reals — you can confirm an upper bound with finite work
but never refute one.  "Way inside with margin eps" is the quantitative
containment that survives completion.
"""

from fractions import Fraction

from formalballs import (
    BallOpen,
    FormalBall,
    diameter_upper,
    meet_witness,
    neighborhood,
    rational_line,
    way_inside,
)

LINE = rational_line()


def bo(*pairs):
    return BallOpen(LINE, tuple(FormalBall(Fraction(c), Fraction(r)) for c, r in pairs))


u = bo((0, Fraction(1, 4)), (10, Fraction(1, 4)))
print("diameter of two far-apart small balls:")
d = diameter_upper(u)
print(f"  < 11 ?    {d.less_than(Fraction(11), 8).label}")
print(f"  < 21/2 ?  {d.less_than(Fraction(21, 2), 64).label}  (tight: true value is 21/2)")

print("\nway-inside with a margin:")
small, big = bo((0, Fraction(1, 2))), bo((0, 2))
print(f"  b(0,1/2) + 1/4 inside b(0,2) ?  {way_inside(small, Fraction(1, 4), big, 8).label}")
print(f"  b(0,1/2) + 2   inside b(0,2) ?  {way_inside(small, Fraction(2), big, 64).label}")

print("\nfattening composes additively:")
once = neighborhood(neighborhood(small, Fraction(1, 8)), Fraction(1, 8))
twice = neighborhood(small, Fraction(1, 4))
print(f"  (u+1/8)+1/8 == u+1/4 ?  {once.balls == twice.balls}")

print("\noverlap witnesses (a positive ball inside both):")
w = meet_witness(bo((0, 1)), bo((1, 1)), 16)
print(f"  b(0,1) ∧ b(1,1) contains b({w.center}, {w.radius})")
print(f"  b(0,1) ∧ b(5,1) -> {meet_witness(bo((0, 1)), bo((5, 1)), 64)}")
