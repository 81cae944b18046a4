import random
import time
from fractions import Fraction

import pytest

from core.errors import NonCommutingPoint
from core.fields import GF4
from core.multipoly import MultiPoly
from core.nullstellensatz import (
    SWEEP_FAMILIES,
    Point,
    commutator_identity,
    evaluation_ideal_certificate,
    module_action,
    is_commuting_point,
    non_commuting_pair,
    quaternion_point,
    quaternion_remark_check,
    rational_sqrt,
    reduce_modulo_point,
    remark_sweep,
    sqrt_in_centralizer,
    substitute_at_commuting_point,
    sweep_triple,
)
from core.quaternion import I, J, K, ONE, RationalQuaternion, random_quaternion


def test_commuting_examples(gf4_ring):
    assert is_commuting_point(quaternion_point(I, I))
    assert non_commuting_pair(quaternion_point(I, J)) == (0, 1)
    assert non_commuting_pair(quaternion_point(ONE, I, J)) == (1, 2)
    w = gf4_ring.constant(GF4.w)
    assert not is_commuting_point(Point(gf4_ring, (gf4_ring.t, w)))
    t2 = gf4_ring.t * gf4_ring.t
    assert is_commuting_point(Point(gf4_ring, (t2, w)))


def test_empty_point_is_rejected(quaternions):
    with pytest.raises(ValueError):
        Point(quaternions, ())


def test_commutator_identity_on_quaternions():
    expansion, kappa = commutator_identity(quaternion_point(I, J), 0, 1)
    # j*i - i*j = -2k
    assert kappa == K.scale(Fraction(-2))
    assert expansion == MultiPoly.constant(quaternion_point(I).ring, 2, kappa)


def _random_point(ring, rng, n):
    if rng.random() < 0.5:
        base = ring.random_element(rng)
        # polynomials in one element commute pairwise
        coords = [base]
        for _ in range(n - 1):
            coords.append(coords[-1] * base + ring.from_int(rng.randint(-2, 2)))
        return Point(ring, tuple(coords))
    return Point(ring, tuple(ring.random_element(rng) for _ in range(n)))


@pytest.mark.parametrize("ring_name", ["quaternions", "gf4_ring"])
def test_certificates_on_random_points(ring_name, request):
    ring = request.getfixturevalue(ring_name)
    rng = random.Random(73)
    verdicts = set()
    for index in range(500):
        p = _random_point(ring, rng, 2 + index % 2)
        cert = evaluation_ideal_certificate(p, rng, samples=2)
        assert cert.proper == is_commuting_point(p)
        if cert.proper:
            assert cert.module.n == p.n
        else:
            assert cert.unit.verify(p)
            assert not ring.is_zero(cert.unit.kappa)
        verdicts.add(cert.verdict)
    assert verdicts == {"proper_maximal", "improper"}


def test_gf4_unit_witness(gf4_ring):
    w = gf4_ring.constant(GF4.w)
    p = Point(gf4_ring, (gf4_ring.t, w))
    cert = evaluation_ideal_certificate(p)
    assert cert.verdict == "improper"
    # w*t - t*w = w*t + (w+1)*t = t
    assert cert.unit.kappa == gf4_ring.t
    data = cert.unit.to_json(gf4_ring)
    assert data["pair"] == [0, 1]


def test_substitution_examples():
    ring = quaternion_point(I).ring
    x, y = MultiPoly.variable(ring, 2, 0), MultiPoly.variable(ring, 2, 1)
    f = x * y + MultiPoly.constant(ring, 2, J) * x
    p = quaternion_point(I, I)
    # i*i + j*i = -1 - k
    assert substitute_at_commuting_point(f, p) == -ONE - K
    with pytest.raises(NonCommutingPoint):
        substitute_at_commuting_point(f, quaternion_point(I, J))


def test_module_certificate_records_computed_checks():
    cert = evaluation_ideal_certificate(quaternion_point(I, I, -I), random.Random(5), samples=3)
    assert cert.verdict == "proper_maximal"
    assert cert.module.checks == (
        "every x_k - a_k annihilates 1",
        "right multiplications by a_1..a_3 commute pairwise on 3 samples",
        "actions are left D-linear on 3 samples",
    )


def test_module_action_on_one_is_substitution(quaternions):
    rng = random.Random(83)
    for _ in range(50):
        base = quaternions.random_element(rng)
        p = Point(quaternions, (base, base * base + ONE))
        f = MultiPoly.random(quaternions, 2, rng, max_degree=3)
        assert module_action(f, quaternions.one, p) == substitute_at_commuting_point(f, p)
        for k, a in enumerate(p.coords):
            assert quaternions.is_zero(module_action(MultiPoly.linear(quaternions, 2, k, a), quaternions.one, p))


def test_substitution_agrees_with_reduction(quaternions):
    rng = random.Random(79)
    for _ in range(100):
        base = quaternions.random_element(rng)
        p = Point(quaternions, (base, base * base - ONE))
        f = MultiPoly.random(quaternions, 2, rng, max_degree=3)
        assert substitute_at_commuting_point(f, p) == reduce_modulo_point(f, p)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None
    assert sqrt_in_centralizer(Fraction(-4), Fraction(0), Fraction(1)) == (Fraction(0), Fraction(2))
    # (1 + e)^2 = 1 - 1 + 2e with e^2 = -1
    assert sqrt_in_centralizer(Fraction(0), Fraction(2), Fraction(1)) == (Fraction(1), Fraction(1))


def test_remark_examples():
    report = quaternion_remark_check(-I, I, I)
    assert report.verdict == "fails_c" and report.root == I and report.root_commutes
    report = quaternion_remark_check(-I, I, J)
    assert report.verdict == "fails_c" and report.root == J
    report = quaternion_remark_check(I, J, I)
    assert report.verdict == "conditions_not_met"
    report = quaternion_remark_check(-I, I, RationalQuaternion(2))
    assert report.verdict == "fails_c" and report.c_central
    b = RationalQuaternion(1, 0, 1, 1)
    # x^2 - 2x + 3 has no zero in Q(i)
    report = quaternion_remark_check(b.conjugate(), b, I)
    assert report.verdict == "undetermined" and report.root is None
    assert not report.fully_certified
    assert report.to_json()["root_in_Qc"] is None


def test_quadratic_formula_root_is_a_zero():
    b = RationalQuaternion(1, 0, 1, 0)
    report = quaternion_remark_check(b.conjugate(), b, I)
    r = report.root
    assert r == RationalQuaternion(1, 1)
    s, m = b.conjugate() + b, b.conjugate() * b
    assert (r * r - s * r + m).is_zero()


def test_sweep_families():
    rng = random.Random(83)
    for family in SWEEP_FAMILIES:
        a, b, _ = sweep_triple(family, rng)
        if family == "opposite_imaginary":
            assert a == -b and b.r == 0
        if family == "conjugate":
            assert a == b.conjugate()
    with pytest.raises(ValueError):
        sweep_triple("other", rng)


def test_sweep_never_certifies():
    seen = []
    report = remark_sweep(120, seed=3, progress=seen.append)
    assert report.passed
    assert report.fully_certified == 0
    assert sum(report.histogram.values()) == 120
    assert seen == list(range(120))
    assert set(report.by_family) == set(SWEEP_FAMILIES)
    data = report.to_json()
    assert data["evidence_only"] is True
    assert data["overall"] == "pass"
    assert set(report.histogram) <= {"fails_c", "conditions_not_met", "undetermined"}
    assert report.by_family["random"].get("conditions_not_met", 0) > 0


def test_sweep_is_deterministic():
    assert remark_sweep(30, seed=11).to_json() == remark_sweep(30, seed=11).to_json()


@pytest.mark.slow
def test_full_sweep_finishes_in_time():
    start = time.perf_counter()
    report = remark_sweep(10000)
    elapsed = time.perf_counter() - start
    assert report.fully_certified == 0
    assert sum(report.histogram.values()) == 10000
    assert elapsed < 60


def test_random_quaternion_points_commute_with_themselves():
    rng = random.Random(89)
    for _ in range(20):
        q = random_quaternion(rng)
        assert is_commuting_point(quaternion_point(q, q * q, q + ONE))
