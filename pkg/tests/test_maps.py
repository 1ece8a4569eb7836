import random
from fractions import Fraction

import pytest

from formalballs.carriers import rational_line
from formalballs.completion import (
    CertificateError,
    member_query,
    point_distance,
    point_of_carrier,
)
from formalballs.balls import BallOpen, FormalBall
from formalballs.maps import (
    ISOMETRIC,
    METRIC,
    UNIFORM,
    MapRep,
    ModulusFn,
    RegionError,
    apply_map,
    classify_map,
    compose_maps,
    extend_by_density,
    identity_map,
    limit_of_maps,
)
from formalballs.numbers import half_pow

LINE = rational_line()


def lpoint(q):
    return point_of_carrier(LINE, Fraction(q))


def half_map():
    return MapRep(
        source=LINE,
        target=LINE,
        carrier_map=lambda x: point_of_carrier(LINE, x / 2),
        modulus=lambda eps: eps,
        cls=METRIC,
        label="half",
    )


def shift_map(q):
    q = Fraction(q)
    return MapRep(
        source=LINE,
        target=LINE,
        carrier_map=lambda x: point_of_carrier(LINE, x + q),
        modulus=lambda eps: eps,
        cls=ISOMETRIC,
        label=f"shift{q}",
    )


def test_modulus_wrapper_monotone():
    calls = []

    def raw(eps):
        calls.append(eps)
        return Fraction(1, 4) if eps > Fraction(1, 2) else eps

    m = ModulusFn(raw)
    assert m(Fraction(1)) == Fraction(1, 4)
    # a smaller eps can never get a larger answer than a bigger eps
    assert m(Fraction(1, 2)) <= Fraction(1, 4)
    with pytest.raises(ValueError):
        m(Fraction(0))


def test_apply_map_half():
    img = apply_map(half_map(), lpoint(1))
    assert abs(img.approx(10) - Fraction(1, 2)) <= half_pow(10)


def test_identity_map_equivalence():
    p = lpoint("1/3")
    img = apply_map(identity_map(LINE), p)
    u = BallOpen.of(LINE, FormalBall(Fraction(1, 3), Fraction(1, 8)))
    assert member_query(img, u, 16).is_yes
    assert point_distance(img, p).less_than(half_pow(20), 30).is_yes


def test_shift_preserves_distance():
    f = shift_map(10)
    a = apply_map(f, lpoint(0))
    b = apply_map(f, lpoint(1))
    assert point_distance(a, b).less_than(Fraction(11, 10), 16).is_yes
    assert not point_distance(a, b).less_than(Fraction(9, 10), 64).is_yes


def test_compose_behaves_like_quarter():
    q = compose_maps(half_map(), half_map())
    img = apply_map(q, lpoint(1))
    assert abs(img.approx(10) - Fraction(1, 4)) <= half_pow(10)
    assert q.cls == METRIC
    idf = compose_maps(identity_map(LINE), half_map())
    assert abs(apply_map(idf, lpoint(2)).approx(10) - 1) <= half_pow(10)


def test_compose_class_weakest():
    iso = shift_map(1)
    assert compose_maps(iso, iso).cls == ISOMETRIC
    uni = MapRep(
        source=LINE,
        target=LINE,
        carrier_map=lambda x: point_of_carrier(LINE, 2 * x),
        modulus=lambda eps: eps / 2,
        cls=UNIFORM,
        label="double",
    )
    assert compose_maps(iso, uni).cls == UNIFORM


def test_region_enforced():
    f = MapRep(
        source=LINE,
        target=LINE,
        carrier_map=lambda x: point_of_carrier(LINE, x * x),
        modulus=lambda eps: eps / 4,
        cls=UNIFORM,
        region=lambda x: abs(x) <= 2,
        label="square",
    )
    img = apply_map(f, lpoint("3/2"))
    assert abs(img.approx(8) - Fraction(9, 4)) <= half_pow(8)
    with pytest.raises(RegionError):
        apply_map(f, lpoint(5)).approx(4)


def test_extend_by_density_square():
    pairs = [
        (Fraction(1), Fraction(5, 4)),
        (Fraction(3, 2), Fraction(3, 2)),
        (Fraction(-1), Fraction(-9, 8)),
    ]
    f = extend_by_density(
        LINE,
        LINE,
        lambda x: x * x,
        lambda eps: eps / 4,
        sample_pairs=pairs,
        label="square",
    )
    img = apply_map(f, lpoint("3/2"))
    assert abs(img.approx(10) - Fraction(9, 4)) <= half_pow(10)


def test_extend_by_density_detects_bad_modulus():
    # doubling with a claimed identity modulus is wrong on close pairs
    pairs = [(Fraction(0), Fraction(1, 8))]
    with pytest.raises(CertificateError):
        extend_by_density(
            LINE, LINE, lambda x: 2 * x, lambda eps: eps, sample_pairs=pairs
        )


def test_extension_uniqueness_on_probe():
    f1 = extend_by_density(
        LINE, LINE, lambda x: x / 2, lambda eps: eps, rng=random.Random(0)
    )
    f2 = extend_by_density(
        LINE, LINE, lambda x: x / 2, lambda eps: eps / 2, rng=random.Random(0)
    )
    p = lpoint("7/3")
    d = point_distance(apply_map(f1, p), apply_map(f2, p))
    assert d.less_than(half_pow(20), 40).is_yes


def test_classify_metric_pass_and_fail():
    samples = [(Fraction(0), Fraction(1)), (Fraction(-2), Fraction(3))]
    rep = classify_map(half_map(), samples, 16)
    assert rep["pass"]
    bad = MapRep(
        source=LINE,
        target=LINE,
        carrier_map=lambda x: point_of_carrier(LINE, 2 * x),
        modulus=lambda eps: eps,
        cls=METRIC,
        label="double-as-metric",
    )
    rep = classify_map(bad, samples, 16)
    assert not rep["pass"]


def test_classify_isometric():
    rep = classify_map(
        shift_map(10), [(Fraction(0), Fraction(1)), (Fraction(2), Fraction(5))], 16
    )
    assert rep["pass"]


def test_limit_of_maps():
    def seq(k):
        c = 1 - half_pow(k)
        return MapRep(
            source=LINE,
            target=LINE,
            carrier_map=lambda x, c=c: point_of_carrier(LINE, c * x),
            modulus=lambda eps: eps,
            cls=METRIC,
            label=f"scale{k}",
        )

    samples = [Fraction(1), Fraction(-2), Fraction(1, 2), Fraction(3)]
    modulus = lambda eps: max(4, (8 / eps).__ceil__().bit_length() + 2)
    lim = limit_of_maps(seq, modulus, sample_points=samples)
    for x in samples:
        d = point_distance(apply_map(lim, lpoint(x)), lpoint(x))
        assert d.less_than(half_pow(10), 24).is_yes


def test_limit_of_maps_bad_certificate():
    def seq(k):
        return shift_map(k)

    with pytest.raises(CertificateError):
        limit_of_maps(seq, lambda _eps: 0, sample_points=[Fraction(0)])
