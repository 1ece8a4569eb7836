"""Finite-discrete function algebras: admissibility, sup norm, spectrum.

For a finite discrete point set X everything classical becomes decidable:
basic opens of the real function locale are given by finitely many lower
and upper constraints, admissibility is a finite check, and the function
algebra is the product C* algebra C^n with the coordinate projections as
its characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .numbers import half_pow, parse_rational, rational_str
from .reals import (
    ComplexPoint,
    add_c,
    complex_of_rational,
    conj_c,
    modulus_c,
    modulus_interval,
    mul_c,
    scale_c,
)
from .upper import Query, UpperReal


@dataclass(frozen=True)
class FiniteDiscreteSpace:
    """Points 0..n-1 with the discrete topology."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("space needs at least one point")

    @property
    def points(self):
        return range(self.n)


@dataclass(frozen=True)
class BasicOpenXR:
    """A basic open of the real function locale on a finite discrete space.

    lowers: pairs (subset, u) constraining f < u on the subset.
    uppers: pairs (subset, v) constraining f > v on the subset.
    """

    lowers: tuple
    uppers: tuple

    @staticmethod
    def of(lowers, uppers) -> "BasicOpenXR":
        norm = lambda cs: tuple(
            (frozenset(s), parse_rational(q)) for s, q in cs
        )
        return BasicOpenXR(norm(lowers), norm(uppers))


def _check_ranges(b: BasicOpenXR, space: FiniteDiscreteSpace):
    for s, _q in b.lowers + b.uppers:
        for x in s:
            if not (isinstance(x, int) and 0 <= x < space.n):
                raise IndexError(f"point {x!r} outside the {space.n}-point space")


def is_admissible(b: BasicOpenXR, space: FiniteDiscreteSpace) -> bool:
    """No pair of constraints f < u, f > v with u <= v overlaps in X."""
    _check_ranges(b, space)
    for s_u, u in b.lowers:
        for s_v, v in b.uppers:
            if u <= v and s_u & s_v:
                return False
    return True


def has_point(
    b: BasicOpenXR, space: FiniteDiscreteSpace
) -> Optional[Callable[[int], Fraction]]:
    """A rational function satisfying every constraint strictly, or None.

    Pointwise: x needs max of its lower thresholds < min of its upper
    caps; the witness value is their midpoint, with one-sided constraints
    resolved by stepping one unit past the threshold and unconstrained
    points sent to 0.
    """
    _check_ranges(b, space)
    values = {}
    for x in space.points:
        caps = [u for s, u in b.lowers if x in s]
        floors = [v for s, v in b.uppers if x in s]
        if caps and floors:
            u = min(caps)
            v = max(floors)
            if v >= u:
                return None
            values[x] = (u + v) / 2
        elif caps:
            values[x] = min(caps) - 1
        elif floors:
            values[x] = max(floors) + 1
        else:
            values[x] = Fraction(0)
    return values.__getitem__


def admissibility_theorem_check(
    space: FiniteDiscreteSpace, instances
) -> dict:
    """Admissibility must coincide with point existence on every instance.

    Also checks the two sound directions separately: a found point always
    satisfies its constraints, and point existence implies admissibility.
    """
    checked = 0
    for b in instances:
        adm = is_admissible(b, space)
        f = has_point(b, space)
        if adm != (f is not None):
            return {
                "result": "Fail",
                "checked": checked,
                "witness": _basic_open_json(b),
                "admissible": adm,
                "has_point": f is not None,
            }
        if f is not None:
            for s, u in b.lowers:
                for x in s:
                    if not f(x) < u:
                        return {
                            "result": "Fail",
                            "checked": checked,
                            "witness": _basic_open_json(b),
                            "reason": f"witness violates f({x}) < {u}",
                        }
            for s, v in b.uppers:
                for x in s:
                    if not f(x) > v:
                        return {
                            "result": "Fail",
                            "checked": checked,
                            "witness": _basic_open_json(b),
                            "reason": f"witness violates f({x}) > {v}",
                        }
        checked += 1
    return {"result": "Pass", "checked": checked}


def _basic_open_json(b: BasicOpenXR) -> dict:
    return {
        "lowers": [[sorted(s), rational_str(q)] for s, q in b.lowers],
        "uppers": [[sorted(s), rational_str(q)] for s, q in b.uppers],
    }


# -- the finite function C* algebra ---------------------------------------


@dataclass(frozen=True)
class AlgebraElement:
    """An element of the n-point function algebra: one complex value per point."""

    values: tuple

    @property
    def n(self):
        return len(self.values)

    @staticmethod
    def of_rationals(pairs) -> "AlgebraElement":
        return AlgebraElement(
            tuple(complex_of_rational(re, im) for re, im in pairs)
        )


def alg_add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(tuple(add_c(x, y) for x, y in zip(a.values, b.values)))


def alg_mul(a: AlgebraElement, b: AlgebraElement, bound: int) -> AlgebraElement:
    return AlgebraElement(
        tuple(mul_c(x, y, bound) for x, y in zip(a.values, b.values))
    )


def alg_star(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(tuple(conj_c(x) for x in a.values))


def alg_scale(a: AlgebraElement, c) -> AlgebraElement:
    return AlgebraElement(tuple(scale_c(x, c) for x in a.values))


def unit(n: int) -> AlgebraElement:
    return AlgebraElement(tuple(complex_of_rational(1) for _ in range(n)))


def idempotent(n: int, i: int) -> AlgebraElement:
    return AlgebraElement(
        tuple(complex_of_rational(1 if j == i else 0) for j in range(n))
    )


def sup_norm(a: AlgebraElement) -> UpperReal:
    """Upper real for the sup of the coordinate moduli."""
    bounds = [modulus_c(x) for x in a.values]

    def bound(effort):
        return max(b.bound(effort) for b in bounds)

    return UpperReal(bound)


def sup_norm_interval(a: AlgebraElement, n: int):
    """Two-sided enclosure of the sup norm at about 2^-n width."""
    los, his = zip(*(modulus_interval(x, n) for x in a.values))
    return max(los), max(his)


def in_unit_ball(a: AlgebraElement, q, effort: int) -> Query:
    """Semi-decide that every coordinate modulus is strictly below q."""
    q = parse_rational(q)
    if q <= 0:
        raise ValueError("radius must be positive")
    for x in a.values:
        if not modulus_c(x).less_than(q, effort).is_yes:
            return Query.NOT_YET
    return Query.YES


def cstar_identity_check(a: AlgebraElement, bound: int, k: int) -> dict:
    """|norm(a* a) - norm(a)^2| below 2^-k via interval evaluation."""
    star_a = alg_mul(alg_star(a), a, bound)
    depth = k + 4
    lo1, hi1 = sup_norm_interval(star_a, depth)
    lo2, hi2 = sup_norm_interval(a, depth)
    lo_sq, hi_sq = lo2 * lo2, hi2 * hi2
    gap = max(hi1 - lo_sq, hi_sq - lo1)
    ok = gap < half_pow(k)
    return {
        "result": "Pass" if ok else "Fail",
        "k": k,
        "norm_aa": [rational_str(lo1), rational_str(hi1)],
        "norm_sq": [rational_str(lo_sq), rational_str(hi_sq)],
    }


def submultiplicativity_check(
    a: AlgebraElement, b: AlgebraElement, bound: int, effort: int
) -> bool:
    """norm(ab) < norm(a) upper * norm(b) upper + tolerance."""
    ab = alg_mul(a, b, bound)
    na = sup_norm(a).bound(effort)
    nb = sup_norm(b).bound(effort)
    tol = half_pow(max(4, effort // 2))
    return sup_norm(ab).less_than(na * nb + tol, effort).is_yes


# -- spectrum of the n-dimensional algebra ---------------------------------


def _coord_bound(*points: ComplexPoint) -> int:
    """A small certified integer bound on every coordinate of the points."""
    worst = Fraction(1)
    for z in points:
        re, im = z.approx(4)
        worst = max(worst, abs(re), abs(im))
    return int(worst) + 2


@dataclass(frozen=True)
class Character:
    """A candidate character given by its values on the idempotent basis."""

    values: tuple
    label: str = "chi"

    @property
    def n(self):
        return len(self.values)

    def apply(self, a: AlgebraElement, bound: int = None) -> ComplexPoint:
        acc = complex_of_rational(0)
        for chi_e, coord in zip(self.values, a.values):
            b = bound if bound is not None else _coord_bound(chi_e, coord)
            acc = add_c(acc, mul_c(chi_e, coord, b))
        return acc


def spectrum_of_cn(n: int):
    """The n coordinate projections, one per point of the underlying space."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [
        Character(
            tuple(
                complex_of_rational(1 if j == i else 0) for j in range(n)
            ),
            label=f"eval@{i}",
        )
        for i in range(n)
    ]


def _close_to(z: ComplexPoint, target: Fraction, k: int) -> bool:
    re, im = z.approx(k + 3)
    err = half_pow(k + 2)
    return abs(re - target) + err < half_pow(k) and abs(im) + err < half_pow(k)


def verify_character(chi: Character, samples, bound: int, k: int) -> dict:
    """Check unitality, linearity, multiplicativity, idempotent dichotomy.

    The dichotomy step is the executable core of the spectrum count: each
    basis idempotent must evaluate to 0 or 1, the values must sum to 1,
    so exactly one idempotent is sent to 1 and the character is a
    coordinate projection.
    """
    n = chi.n
    failures = []

    if not _close_to(chi.apply(unit(n)), Fraction(1), k):
        failures.append({"law": "unit", "witness": "1"})

    one_count = 0
    total = complex_of_rational(0)
    for i in range(n):
        z = chi.apply(idempotent(n, i))
        is0 = _close_to(z, Fraction(0), k)
        is1 = _close_to(z, Fraction(1), k)
        if not (is0 or is1):
            failures.append({"law": "idempotent dichotomy", "witness": f"e{i}"})
        if is1:
            one_count += 1
        total = add_c(total, z)
    if not _close_to(total, Fraction(1), k):
        failures.append({"law": "idempotent sum", "witness": "sum e_i"})
    if one_count != 1 and not failures:
        failures.append({"law": "projection count", "witness": str(one_count)})

    for a, b in samples:
        lhs = chi.apply(alg_add(a, b))
        ca, cb = chi.apply(a), chi.apply(b)
        rhs = add_c(ca, cb)
        if not _is_query_equal(lhs, rhs, k):
            failures.append({"law": "additivity", "witness": "sampled pair"})
        lhs = chi.apply(alg_mul(a, b, bound))
        rhs = mul_c(ca, cb, _coord_bound(ca, cb))
        if not _is_query_equal(lhs, rhs, k):
            failures.append({"law": "multiplicativity", "witness": "sampled pair"})

    return {
        "character": chi.label,
        "result": "Pass" if not failures else "Fail",
        "failures": failures,
        "k": k,
    }


def _is_query_equal(x: ComplexPoint, y: ComplexPoint, k: int) -> bool:
    xr, xi = x.approx(k + 3)
    yr, yi = y.approx(k + 3)
    err = half_pow(k + 1)
    return abs(xr - yr) + err < half_pow(k) and abs(xi - yi) + err < half_pow(k)


def duality_round_trip(n: int, k: int, samples=None, bound: int = 8) -> dict:
    """Spectrum points biject with the space and evaluation preserves norm.

    Characters are separated by idempotents; applying every character to a
    sampled element recovers its coordinates, so the evaluation map back
    into the n-dimensional algebra is the identity and norm-preserving.
    """
    chars = spectrum_of_cn(n)
    report = {"n": n, "k": k, "characters": len(chars)}
    failures = []

    if len(chars) != n:
        failures.append({"law": "cardinality", "witness": len(chars)})
    for i, chi in enumerate(chars):
        for j in range(n):
            z = chi.apply(idempotent(n, j))
            want = Fraction(1 if j == i else 0)
            if not _close_to(z, want, k):
                failures.append(
                    {"law": "separation by idempotents", "witness": f"chi{i},e{j}"}
                )

    if samples is None:
        samples = [
            AlgebraElement.of_rationals(
                [(Fraction(j + 1, 2), Fraction((-1) ** j)) for j in range(n)]
            )
        ]
    for a in samples:
        recovered = AlgebraElement(tuple(chi.apply(a) for chi in chars))
        lo1, hi1 = sup_norm_interval(a, k + 4)
        lo2, hi2 = sup_norm_interval(recovered, k + 4)
        if max(hi1 - lo2, hi2 - lo1) >= half_pow(k):
            failures.append(
                {
                    "law": "norm preservation",
                    "witness": [rational_str(hi1), rational_str(hi2)],
                }
            )
        for i in range(n):
            if not _is_query_equal(recovered.values[i], a.values[i], k):
                failures.append(
                    {"law": "evaluation round trip", "witness": f"coord {i}"}
                )

    report["result"] = "Pass" if not failures else "Fail"
    report["failures"] = failures
    return report
