"""Finite duality: n-point spaces versus n-dimensional function algebras.

Basic opens of the real-valued function space are constraint systems; a
combinatorial disjointness condition decides whether they contain a point.
Characters of C^n are exactly the coordinate evaluations, and the round
trip point -> character -> point recovers the original data.
"""

from formalballs import (
    AlgebraElement,
    BasicOpenXR,
    FiniteDiscreteSpace,
    cstar_identity_check,
    duality_round_trip,
    has_point,
    is_admissible,
    spectrum_of_cn,
    sup_norm,
)
from fractions import Fraction

X = FiniteDiscreteSpace(2)
print("admissibility = every lower bound avoids every conflicting upper bound:")
bad = BasicOpenXR.of([({0}, 0)], [({0}, 1)])
good = BasicOpenXR.of([({0}, 0)], [({1}, 1)])
print(f"  f(0)>0 and f(0)<1 overlap on point 0:  admissible={is_admissible(bad, X)}")
print(f"  f(0)>0 and f(1)<1 are disjoint:        admissible={is_admissible(good, X)}")
f = has_point(good, X)
print(f"  witness function: f(0)={f(0)}, f(1)={f(1)}")

print("\nthe norm identity ||a* a|| = ||a||^2, verified to 2^-20:")
a = AlgebraElement.of_rationals([(2, 0), (0, 1)])
print(f"  a=(2, i): {cstar_identity_check(a, bound=8, k=20)['result']}")
print(f"  sup norm of (2, i) < 2.01 ? "
      f"{sup_norm(a).less_than(Fraction(201, 100), 8).label}")

print("\nthe spectrum of C^n is n coordinate evaluations:")
for n in (1, 2, 3):
    print(f"  n={n}: {[c.label for c in spectrum_of_cn(n)]}")

print("\nduality round trip for n up to 4:")
for n in (1, 2, 3, 4):
    rep = duality_round_trip(n, k=16)
    print(f"  n={n}: {rep['result']}")
