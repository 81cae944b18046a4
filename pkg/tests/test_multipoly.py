import random

import pytest

from core.errors import ParseError
from core.fields import GF4
from core.multipoly import BiPoly, MultiPoly
from core.quaternion import I, J, K
from core.skewpoly import CentralPoly


def test_variables_are_central(gf4_ring):
    ring = gf4_ring
    x, y = BiPoly.x(ring), BiPoly.y(ring)
    w = BiPoly.const(ring, ring.constant(GF4.w))
    assert x * y == y * x
    assert x * w == w * x
    t, wc = BiPoly.const(ring, ring.t), ring.constant(GF4.w)
    # coefficients still multiply in D
    assert not (t * w == w * t)
    assert (t * w) == BiPoly.const(ring, ring.t * wc)


def test_ring_laws(quaternions):
    rng = random.Random(41)
    for _ in range(100):
        f, g, h = (MultiPoly.random(quaternions, 3, rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero()


def test_divide_by_linear(gaussian_ring):
    ring = gaussian_ring
    rng = random.Random(43)
    for _ in range(100):
        f = BiPoly.random(ring, 2, rng, max_degree=3)
        a = ring.random_element(rng)
        quotient, remainder = f.divide_by_linear(BiPoly.Y, a)
        assert quotient * BiPoly.linear(ring, 2, BiPoly.Y, a) + remainder == f
        assert remainder.degree_in(BiPoly.Y) <= 0


def test_x_poly_round_trip(gf4_ring):
    p = CentralPoly.build(gf4_ring, [gf4_ring.t, gf4_ring.zero, gf4_ring.one])
    assert BiPoly.from_x_poly(p).to_x_poly() == p
    with pytest.raises(ValueError):
        BiPoly.y(gf4_ring).to_x_poly()


def test_codec(quaternions):
    f = MultiPoly.build(quaternions, 2, {(1, 0): I, (0, 2): J, (0, 0): K})
    assert MultiPoly.from_json(quaternions, f.to_json()) == f
    with pytest.raises(ParseError):
        MultiPoly.from_json(quaternions, f.to_json(), nvars=3)
    with pytest.raises(ParseError):
        MultiPoly.from_json(quaternions, {"terms": [[[1, 0, 2], ["1", "0", "0", "0"]]]}, nvars=2)
    assert str(BiPoly.x(quaternions)) == "x"
