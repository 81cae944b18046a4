import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import ConfigError, DivisionByZero, Inconclusive, PrecisionExhausted
from core.fields import GAUSSIAN, GF4, Gf4Element, GaussianRational
from core.laurent import (
    PrecisionPolicy,
    SkewLaurentSeries,
    sl_add,
    sl_commutes,
    sl_conjugate,
    sl_inverse,
    sl_mul,
    sl_neg,
)

W = GF4.w
ONE = GF4.one


def series(field, terms, precision=None):
    return SkewLaurentSeries.from_terms(field, terms, precision)


gf4_coeff = st.integers(min_value=0, max_value=3).map(Gf4Element)
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gauss_coeff = st.builds(GaussianRational, small, small)


def exact_series(field, coeffs):
    return st.dictionaries(st.integers(min_value=-3, max_value=3), coeffs, max_size=4).map(
        lambda terms: series(field, terms)
    )


gf4_series = exact_series(GF4, gf4_coeff)
gauss_series = exact_series(GAUSSIAN, gauss_coeff)


def test_twist_examples():
    t = SkewLaurentSeries.t(GF4)
    w = SkewLaurentSeries.constant(W)
    assert sl_mul(t, w) == series(GF4, {1: W + ONE})
    wt = series(GF4, {1: W})
    assert sl_mul(wt, wt) == series(GF4, {2: ONE})
    assert sl_mul(wt, SkewLaurentSeries.constant(ONE)) == wt


def test_addition_examples():
    t = SkewLaurentSeries.t(GF4)
    assert sl_add(t, t).is_zero()
    tq = SkewLaurentSeries.t(GAUSSIAN)
    assert sl_add(sl_neg(tq), tq).is_zero()


@pytest.mark.parametrize("strategy", [gf4_series, gauss_series], ids=["gf4", "gaussian"])
def test_ring_laws_exact(strategy):
    @given(strategy, strategy, strategy)
    def check(f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h

    check()


@pytest.mark.parametrize("strategy", [gf4_series, gauss_series], ids=["gf4", "gaussian"])
def test_valuation_is_additive(strategy):
    @given(strategy, strategy)
    def check(f, g):
        if f.is_zero() or g.is_zero():
            assert (f * g).is_zero()
        else:
            assert (f * g).valuation == f.valuation + g.valuation

    check()


@pytest.mark.parametrize("field", [GF4, GAUSSIAN], ids=["gf4", "gaussian"])
def test_twist_coherence(field):
    rng = random.Random(5)
    for i in range(7):
        ti = SkewLaurentSeries.monomial(field.one, i)
        for _ in range(5):
            u = field.random_element(rng)
            lhs = ti * SkewLaurentSeries.constant(u)
            rhs = SkewLaurentSeries.constant(u.sigma(i)) * ti
            assert lhs == rhs


def test_monomial_inverse_is_exact():
    wt = series(GF4, {1: W})
    inv = sl_inverse(wt)
    assert inv.is_exact
    assert inv == series(GF4, {-1: W})
    assert sl_mul(wt, inv) == SkewLaurentSeries.constant(ONE)
    assert sl_inverse(SkewLaurentSeries.constant(ONE)) == SkewLaurentSeries.constant(ONE)


def test_geometric_inverse_over_gf4():
    f = series(GF4, {0: ONE, 1: ONE})
    inv = sl_inverse(f, PrecisionPolicy(8))
    assert inv.precision == 8
    assert dict(inv.terms()) == {k: ONE for k in range(8)}
    product = sl_mul(f, inv)
    assert dict(product.terms()) == {0: ONE}


@pytest.mark.parametrize("field", [GF4, GAUSSIAN], ids=["gf4", "gaussian"])
def test_inverse_round_trip(field):
    rng = random.Random(11)
    policy = PrecisionPolicy(12)
    checked = 0
    while checked < 500:
        terms = {rng.randint(-2, 2): field.random_element(rng) for _ in range(rng.randint(1, 3))}
        f = series(field, terms)
        if f.is_zero():
            continue
        for product in (f * sl_inverse(f, policy), sl_inverse(f, policy) * f):
            assert dict(product.terms()) == {0: field.one}
        checked += 1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        sl_inverse(SkewLaurentSeries.zero(GF4))


def test_precision_policy_bounds():
    with pytest.raises(ConfigError):
        PrecisionPolicy(3)


def test_cancellation_below_precision_is_flagged():
    f = series(GF4, {0: ONE}, precision=3)
    with pytest.raises(PrecisionExhausted):
        f - f


def test_conjugation_examples():
    w = SkewLaurentSeries.constant(W)
    one = SkewLaurentSeries.constant(ONE)
    t = SkewLaurentSeries.t(GF4)
    assert sl_conjugate(w, one) == w
    assert sl_conjugate(w, t) == SkewLaurentSeries.constant(W + ONE)
    t2 = SkewLaurentSeries.monomial(ONE, 2)
    assert sl_conjugate(t2, w) == t2


def test_commutation_reports():
    wt = series(GF4, {1: W})
    w = SkewLaurentSeries.constant(W)
    report = sl_commutes(wt, w)
    assert not report.equal
    assert (report.exponent, report.lhs, report.rhs) == (1, ONE, W + ONE)
    assert sl_commutes(SkewLaurentSeries.monomial(ONE, 2), w).equal
    assert sl_commutes(wt, wt).equal


def test_inexact_equality_is_inconclusive():
    f = series(GF4, {0: ONE, 1: ONE}, precision=4)
    with pytest.raises(Inconclusive):
        sl_commutes(f, f)


def test_json_codec():
    f = series(GAUSSIAN, {-1: GAUSSIAN.i, 2: GAUSSIAN.one}, precision=6)
    assert SkewLaurentSeries.from_json(GAUSSIAN, f.to_json()) == f
    assert SkewLaurentSeries.from_json(GF4, "w") == SkewLaurentSeries.constant(W)
