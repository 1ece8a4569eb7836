"""Maps between completions: carrier maps with modulus certificates.

A map is represented by its action on carrier elements (landing in the
target completion) together with a modulus of continuity.  Certificates
are spot-checked on samples, never proven; downstream Yes answers are
conditional on the certificate.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .carriers import MetricCarrier
from .completion import (
    CertificateError,
    CompletionPoint,
    limit_point,
    point_distance,
    point_of_carrier,
    apartness_query,
)
from .numbers import half_pow, parse_rational, rational_str
from .upper import Query

ISOMETRIC = "isometric"
METRIC = "metric"
UNIFORM = "uniform"

_CLASS_ORDER = {ISOMETRIC: 2, METRIC: 1, UNIFORM: 0}


class RegionError(ValueError):
    """A map was applied outside its declared bounded region."""


class ModulusFn:
    """Monotone non-decreasing wrapper around a raw modulus function.

    Clamps each answer against answers already given for larger eps, so
    the exposed function can never decrease as eps grows.
    """

    __slots__ = ("_raw", "_cache", "_lock")

    def __init__(self, raw: Callable[[Fraction], Fraction]):
        self._raw = raw
        self._cache: dict[Fraction, Fraction] = {}
        self._lock = threading.Lock()

    def __call__(self, eps: Fraction) -> Fraction:
        eps = parse_rational(eps)
        if eps <= 0:
            raise ValueError("modulus argument must be positive")
        with self._lock:
            if eps in self._cache:
                return self._cache[eps]
            eta = parse_rational(self._raw(eps))
            if eta <= 0:
                raise ValueError("modulus must return a positive rational")
            for e2, v2 in self._cache.items():
                if e2 >= eps:
                    eta = min(eta, v2)
                else:
                    self._cache[e2] = min(v2, eta)
            self._cache[eps] = eta
            return eta


@dataclass
class MapRep:
    """A certified map from the completion of source to that of target."""

    source: MetricCarrier
    target: MetricCarrier
    carrier_map: Callable[[object], CompletionPoint]
    modulus: ModulusFn
    cls: str = METRIC
    region: Optional[Callable[[object], bool]] = None
    label: str = "map"

    def __post_init__(self):
        if self.cls not in _CLASS_ORDER:
            raise ValueError(f"unknown map class {self.cls!r}")
        if not isinstance(self.modulus, ModulusFn):
            self.modulus = ModulusFn(self.modulus)


def _stage_for(modulus: ModulusFn, n: int) -> int:
    """Smallest m with 2^(1-m) < modulus(2^-(n+1))."""
    eta = modulus(half_pow(n + 1))
    m = 0
    while half_pow(m - 1) >= eta:
        m += 1
    return max(m, n + 1)


def apply_map(f: MapRep, p: CompletionPoint) -> CompletionPoint:
    """Push a completion point through the map.

    Stage n of the image is stage n+1 of the image of a source stage deep
    enough that the modulus guarantees 2^-n accuracy.
    """
    if f.source.kind != p.carrier.kind:
        raise ValueError("point is not over the map's source carrier")

    def approx(n):
        m = _stage_for(f.modulus, n)
        x = p.approx(m)
        if f.region is not None and not f.region(x):
            raise RegionError(f"{x!r} outside the declared region of {f.label}")
        return f.carrier_map(x).approx(n + 1)

    return CompletionPoint(f.target, approx)


def identity_map(carrier: MetricCarrier) -> MapRep:
    return MapRep(
        source=carrier,
        target=carrier,
        carrier_map=lambda x: point_of_carrier(carrier, x),
        modulus=ModulusFn(lambda eps: eps),
        cls=ISOMETRIC,
        label="id",
    )


def compose_maps(g: MapRep, f: MapRep) -> MapRep:
    """g after f; modulus composes, class degrades to the weaker one."""
    if f.target.kind != g.source.kind:
        raise ValueError("carrier mismatch in composition")
    cls = f.cls if _CLASS_ORDER[f.cls] <= _CLASS_ORDER[g.cls] else g.cls

    def carrier_map(x):
        return apply_map(g, f.carrier_map(x))

    return MapRep(
        source=f.source,
        target=g.target,
        carrier_map=carrier_map,
        modulus=ModulusFn(lambda eps: f.modulus(g.modulus(eps))),
        cls=cls,
        region=f.region,
        label=f"{g.label}.{f.label}",
    )


def extend_by_density(
    source: MetricCarrier,
    target: MetricCarrier,
    dense_map: Callable[[object], object],
    modulus,
    cls: str = UNIFORM,
    sample_pairs=None,
    check_eps=(Fraction(1), Fraction(1, 2), Fraction(1, 4)),
    check_effort: int = 64,
    rng: Optional[random.Random] = None,
    label: str = "ext",
) -> MapRep:
    """Extension of a carrier-to-carrier map along the dense embedding.

    The modulus contract is spot-checked on sampled source pairs; a
    violation raises CertificateError with the witness pair.
    """
    modulus = modulus if isinstance(modulus, ModulusFn) else ModulusFn(modulus)
    rep = MapRep(
        source=source,
        target=target,
        carrier_map=lambda x: point_of_carrier(target, dense_map(x)),
        modulus=modulus,
        cls=cls,
        label=label,
    )
    if sample_pairs is None:
        rng = rng or random.Random(0)
        sample_pairs = [(source.sample(rng), source.sample(rng)) for _ in range(6)]
    for a, b in sample_pairs:
        d_hi = source.dist(a, b, check_effort).hi
        for eps in check_eps:
            eta = modulus(eps)
            if d_hi < eta:
                d_img = point_distance(rep.carrier_map(a), rep.carrier_map(b))
                if not d_img.less_than(eps, check_effort).is_yes:
                    raise CertificateError("modulus contract violated", (a, b, eps))
    return rep


def classify_map(f: MapRep, samples, effort: int) -> dict:
    """Report, per sampled source pair, whether the claimed class held.

    Metric: image distance exceeds source distance only within tolerance
    (refutation by apartness of images).  Uniform: modulus contract on
    dyadic eps.  Isometric: additionally the reverse inequality.
    """
    tol = half_pow(max(4, effort // 4))
    rows = []
    all_ok = True
    for a, b in samples:
        fa = f.carrier_map(a)
        fb = f.carrier_map(b)
        d_src = f.source.dist(a, b, effort)
        d_img = point_distance(fa, fb)
        row = {"pair": [repr(a), repr(b)]}

        if f.cls in (METRIC, ISOMETRIC):
            ok = d_img.less_than(d_src.hi + tol, effort).is_yes
            row["metric"] = ok
        else:
            ok = True
            for k in range(1, 4):
                eps = half_pow(k)
                if d_src.hi < f.modulus(eps):
                    ok = ok and d_img.less_than(eps, effort).is_yes
            row["uniform"] = ok
        if f.cls == ISOMETRIC and ok:
            lower = apartness_query(fa, fb, effort)
            if d_src.lo > tol:
                rev = lower is not None and lower >= d_src.lo - tol
                row["isometric"] = rev
                ok = ok and rev
        rows.append(row)
        all_ok = all_ok and ok
    return {"map": f.label, "class": f.cls, "pass": all_ok, "pairs": rows}


def limit_of_maps(
    seq: Callable[[int], MapRep],
    modulus: Callable[[Fraction], int],
    sample_points=None,
    check_effort: int = 64,
    rng: Optional[random.Random] = None,
) -> MapRep:
    """Pointwise limit of a uniformly Cauchy sequence of maps.

    The uniform Cauchy certificate is spot-checked on sampled carrier
    points; failure raises CertificateError with the witness.
    """
    first = seq(0)
    if sample_points is None:
        rng = rng or random.Random(0)
        sample_points = [first.source.sample(rng) for _ in range(4)]
    for i in range(2):
        eps = half_pow(i)
        k0 = modulus(eps)
        for a in sample_points:
            d = point_distance(seq(k0).carrier_map(a), seq(k0 + 1).carrier_map(a))
            if not d.less_than(eps, check_effort).is_yes:
                raise CertificateError(
                    "uniform Cauchy certificate failed", (eps, k0, k0 + 1, a)
                )

    def carrier_map(x):
        return limit_point(
            lambda k: seq(k).carrier_map(x),
            lambda eps: modulus(eps),
            check_depth=0,
        )

    def lim_modulus(eps):
        k = modulus(eps / 3)
        return seq(k).modulus(eps / 3)

    cls = first.cls
    for k in (1, 2):
        cls = cls if _CLASS_ORDER[cls] <= _CLASS_ORDER[seq(k).cls] else seq(k).cls

    return MapRep(
        source=first.source,
        target=first.target,
        carrier_map=carrier_map,
        modulus=ModulusFn(lim_modulus),
        cls=cls,
        label="limit",
    )
