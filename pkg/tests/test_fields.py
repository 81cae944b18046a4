from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import DivisionByZero, ParseError
from core.fields import GAUSSIAN, GF4, Gf4Element, GaussianRational, apply_sigma, field_arith, get_field

gf4_elements = st.integers(min_value=0, max_value=3).map(Gf4Element)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussianRational, rationals, rationals)


@pytest.mark.parametrize("elements", [gf4_elements, gaussians], ids=["gf4", "gaussian"])
def test_field_laws(elements):
    @given(elements, elements, elements)
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == a.field.zero

    check()


@pytest.mark.parametrize("elements", [gf4_elements, gaussians], ids=["gf4", "gaussian"])
def test_sigma_is_an_involutive_automorphism(elements):
    @given(elements, elements)
    def check(a, b):
        assert (a * b).sigma() == a.sigma() * b.sigma()
        assert (a + b).sigma() == a.sigma() + b.sigma()
        assert a.sigma(2) == a
        assert a.sigma(-1) == a.sigma(1)

    check()


@given(gaussians)
def test_gaussian_inverse(a):
    if a.is_zero():
        with pytest.raises(DivisionByZero):
            a.inverse()
    else:
        assert a * a.inverse() == GAUSSIAN.one


def test_gf4_tables():
    w = GF4.w
    assert w * w == w + GF4.one
    assert w.sigma() == w + GF4.one
    assert all(e * e.inverse() == GF4.one for e in GF4.nonzero_elements())
    with pytest.raises(DivisionByZero):
        GF4.zero.inverse()


def test_moved_elements_are_moved():
    for field in (GF4, GAUSSIAN):
        c = field.moved_element
        assert not field.is_fixed(c)


def test_parse_and_encode():
    assert GF4.parse("1+w") == GF4.parse("w+1")
    assert GF4.encode(GF4.parse("w")) == "w"
    assert GAUSSIAN.parse({"re": "1/2", "im": "-3"}) == GaussianRational(Fraction(1, 2), -3)
    assert GAUSSIAN.parse("-i") == -GAUSSIAN.i
    assert GAUSSIAN.parse(GAUSSIAN.encode(GaussianRational(2, 5))) == GaussianRational(2, 5)
    with pytest.raises(ParseError):
        GF4.parse("w^2")
    with pytest.raises(ParseError):
        get_field("gf8")


def test_field_arith_dispatch():
    w = GF4.w
    assert field_arith("mul", w, w) == w + GF4.one
    assert field_arith("inv", w, GF4.zero) == w + GF4.one
    assert field_arith("add", w, GF4.zero) == w
    assert field_arith("sub", GAUSSIAN.i, GAUSSIAN.i).is_zero()
    with pytest.raises(DivisionByZero):
        field_arith("inv", GF4.zero, GF4.one)
    with pytest.raises(ValueError):
        field_arith("pow", w, w)


def test_apply_sigma_powers():
    assert apply_sigma(GF4.w, 1) == GF4.w + GF4.one
    assert apply_sigma(GAUSSIAN.i, 1) == -GAUSSIAN.i
    assert apply_sigma(GAUSSIAN.i, 0) == GAUSSIAN.i
    assert apply_sigma(GF4.w, 2) == GF4.w
    assert apply_sigma(GAUSSIAN.i, -1) == -GAUSSIAN.i
