"""Completion points: regular Cauchy data queried through monotone efforts.

Membership in an open is a semi-decision: the answer is NotYet until enough
approximation stages confirm a strict margin, and once Yes it stays Yes.
Limits of sequences demand a convergence certificate, which is spot checked.
"""

from fractions import Fraction

from formalballs import (
    BallOpen,
    CertificateError,
    FilterSeed,
    FormalBall,
    limit_point,
    member_query,
    point_distance,
    point_of_carrier,
    rational_line,
    regularize,
)
from formalballs.numbers import half_pow

LINE = rational_line()


def bo(*pairs):
    return BallOpen(LINE, tuple(FormalBall(Fraction(c), Fraction(r)) for c, r in pairs))


p = point_of_carrier(LINE, Fraction(1, 2))
u = bo((0, 1))
print("membership is monotone in effort; boundary points never confirm:")
print(f"  1/2 in b(0,1) at effort 4:  {member_query(p, u, 4).label}")
boundary = point_of_carrier(LINE, Fraction(1))
print(f"  1 in b(0,1) at effort 64:   {member_query(boundary, u, 64).label}")

print("\ndistances are upper reals between completion points:")
d = point_distance(point_of_carrier(LINE, 0), point_of_carrier(LINE, 1))
print(f"  d(0,1) < 3/2 ?   {d.less_than(Fraction(3, 2), 3).label}")
print(f"  d(0,1) < 9/10 ?  {d.less_than(Fraction(9, 10), 64).label}")

print("\nlimits need a modulus certificate:")
seq = lambda k: point_of_carrier(LINE, 1 - half_pow(k))
lim = limit_point(seq, lambda eps: max(1, (2 / eps).__ceil__().bit_length()))
gap = point_distance(lim, point_of_carrier(LINE, 1))
print(f"  lim (1 - 2^-k) is within 2^-16 of 1:  {gap.less_than(half_pow(16), 24).label}")
try:
    limit_point(lambda k: point_of_carrier(LINE, k % 2), lambda _eps: 0)
except CertificateError as exc:
    print(f"  oscillating sequence rejected: {exc}")

print("\nfilter seeds regularize to strictly-shrunken generators:")
seed = FilterSeed((bo((0, 1)),))
reg = regularize(seed)
print(f"  b(0,1) shrinks to b(0,{reg.generators[0].balls[0].radius}); idempotent: {regularize(reg) is reg}")
