"""Points of the completion of a pre-metric carrier.

A completion point is a stage-indexed shrinking sequence of carrier
elements: stage n lies within 2^-n of the limit.  Filter seeds represent
Cauchy filters by finite generator lists and support regularization.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .balls import BallOpen, FormalBall, way_inside
from .carriers import MetricCarrier, product_space
from .numbers import half_pow
from .upper import Query, UpperReal


class CertificateError(ValueError):
    """A claimed convergence/filter certificate failed; carries the witness."""

    def __init__(self, message, witness):
        super().__init__(f"{message}: {witness}")
        self.witness = witness


class CompletionPoint:
    """A point given by a 2^-n-regular approximation sequence."""

    __slots__ = ("carrier", "_fn", "_stages", "_lock")

    def __init__(self, carrier: MetricCarrier, approx_fn: Callable[[int], object]):
        self.carrier = carrier
        self._fn = approx_fn
        self._stages: dict[int, object] = {}
        self._lock = threading.Lock()

    def approx(self, n: int):
        if n < 0:
            raise ValueError("stage must be >= 0")
        with self._lock:
            if n not in self._stages:
                self._stages[n] = self._fn(n)
            return self._stages[n]

    def to_json(self, depth: int):
        return {
            "stages": [repr(self.approx(n)) for n in range(depth + 1)],
            "depth": depth,
            "truncated": True,
        }


def point_of_carrier(carrier: MetricCarrier, x) -> CompletionPoint:
    """The image of a carrier element: a constant approximation sequence."""
    if not carrier.contains(x):
        raise ValueError(f"{x!r} is not a carrier element")
    return CompletionPoint(carrier, lambda _n: x)


def member_query(p: CompletionPoint, u: BallOpen, effort: int) -> Query:
    """Semi-decide membership of p in the ball open u.

    Yes iff some stage ball b(x_n, 2^-n), n <= effort, sits strictly inside
    a ball of u.  Boundary points answer NotYet forever.
    """
    if p.carrier.kind != u.carrier.kind:
        raise ValueError("point and open live over different carriers")
    if not u.balls:
        return Query.NOT_YET
    carrier = p.carrier
    for n in range(effort, -1, -1):
        x = p.approx(n)
        r = half_pow(n)
        for b in u.balls:
            d = carrier.dist(x, b.center, effort).hi
            # strict slack leaves room for a positive way-inside margin
            if d + r < b.radius:
                return Query.YES
    return Query.NOT_YET


def point_distance(p: CompletionPoint, q: CompletionPoint) -> UpperReal:
    """Sound upper real for the completion distance between two points."""
    if p.carrier.kind != q.carrier.kind:
        raise ValueError("points over different carriers")
    carrier = p.carrier

    def bound(n):
        return carrier.dist(p.approx(n), q.approx(n), n).hi + half_pow(n - 1)

    return UpperReal(bound)


def apartness_query(
    p: CompletionPoint, q: CompletionPoint, effort: int
) -> Optional[Fraction]:
    """Certified positive lower bound on the distance, or None (not yet)."""
    if p.carrier.kind != q.carrier.kind:
        raise ValueError("points over different carriers")
    carrier = p.carrier
    best = None
    for n in range(effort + 1):
        lo = carrier.dist(p.approx(n), q.approx(n), n).lo - half_pow(n - 1)
        if lo > 0 and (best is None or lo > best):
            best = lo
    return best


def pair_point(p: CompletionPoint, q: CompletionPoint) -> CompletionPoint:
    """Componentwise point of the max-metric product of the two carriers."""
    prod = product_space(p.carrier, q.carrier)
    return CompletionPoint(prod, lambda n: (p.approx(n), q.approx(n)))


def proj_point(r: CompletionPoint, side: int) -> CompletionPoint:
    """Projection of a product-carrier point; side is 1 or 2."""
    if r.carrier.components is None:
        raise ValueError("not a product-carrier point")
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    component = r.carrier.components[side - 1]
    return CompletionPoint(component, lambda n: r.approx(n)[side - 1])


def limit_point(
    seq: Callable[[int], CompletionPoint],
    modulus: Callable[[Fraction], int],
    check_depth: int = 2,
    check_effort: int = 64,
) -> CompletionPoint:
    """Limit of a Cauchy sequence of points with a convergence modulus.

    modulus(eps) is a stage index k0 with pointDistance(seq k, seq l) < eps
    for all k, l >= k0.  The certificate is spot-checked on a few dyadic
    eps; a violation raises CertificateError with the failing (eps, k, l).
    """
    first = seq(0)
    carrier = first.carrier

    for i in range(check_depth):
        eps = half_pow(i)
        k0 = modulus(eps)
        pairs = [(k0, k0 + 1), (k0, k0 + 2)]
        for k, l in pairs:
            d = point_distance(seq(k), seq(l))
            if not d.less_than(eps, check_effort).is_yes:
                raise CertificateError(
                    "Cauchy certificate failed", (eps, k, l)
                )

    def approx(n):
        k = modulus(half_pow(n + 1))
        return seq(k).approx(n + 1)

    return CompletionPoint(carrier, approx)


# -- filter seeds ----------------------------------------------------------


@dataclass(frozen=True)
class FilterSeed:
    """Finite generators of a Cauchy filter (upward closure is implicit)."""

    generators: tuple[BallOpen, ...]
    regular: bool = False


def seed_member_query(f: FilterSeed, v: BallOpen, effort: int) -> Query:
    """Semi-decide v's membership in the generated filter."""
    for u in f.generators:
        if not u.balls:
            continue
        eps = min(b.radius for b in u.balls) / 4
        if way_inside(u, eps, v, effort).is_yes:
            return Query.YES
    return Query.NOT_YET


def regularize(f: FilterSeed, effort: int = 32) -> FilterSeed:
    """Shrink generators so each new one sits way inside an old one.

    Checks the meet-compatibility of the generators first (reporting the
    failing pair), and is idempotent: a regular seed is returned unchanged.
    """
    from .balls import meet_witness

    if f.regular:
        return f
    gens = [g for g in f.generators if g.balls]
    for i, u in enumerate(gens):
        for j in range(i + 1, len(gens)):
            if meet_witness(u, gens[j], effort) is None:
                raise CertificateError("no meet witness for generator pair", (i, j))
    min_radius = min(
        (b.radius for g in gens for b in g.balls), default=Fraction(1)
    )
    shrunk = []
    for k, g in enumerate(gens):
        eps = half_pow(k) * min_radius / 4
        shrunk.append(
            BallOpen(
                g.carrier,
                tuple(FormalBall(b.center, b.radius - eps) for b in g.balls),
            )
        )
    return FilterSeed(tuple(shrunk), regular=True)


def seed_of_point(p: CompletionPoint, depth: int) -> FilterSeed:
    """Stage-ball generators of a completion point, slightly fattened.

    The extra 2 * 2^-depth keeps pairwise overlaps strictly positive so
    meet witnesses are findable at the stage centers.
    """
    pad = 2 * half_pow(depth)
    gens = tuple(
        BallOpen.of(p.carrier, FormalBall(p.approx(n), half_pow(n) + pad))
        for n in range(depth + 1)
    )
    return FilterSeed(gens)
