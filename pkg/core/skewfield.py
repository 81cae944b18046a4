"""Exact division ring generated by skew Laurent polynomials and their inverses.

When sigma has order 2, D = K((t, sigma)) is a quaternion algebra over its
center F((t^2)), F the sigma-fixed subfield. Writing g = alpha + beta*t with
alpha, beta in K((t^2)), the conjugate g* = sigma(alpha) - beta*t satisfies
g*g* = g**g = alpha*sigma(alpha) - beta*sigma(beta)*t^2, which is central.
So every element reached from Laurent polynomials by the ring operations and
inversion is num * den^{-1} with den central, and stays exact.
"""

import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from core.errors import DivisionByZero, ParseError, PrecisionExhausted, ShapeMismatch
from core.fields import BaseField, FieldElement
from core.laurent import PrecisionPolicy, SkewLaurentSeries
from core.ring import DivisionRing


def central_norm(g: SkewLaurentSeries) -> Tuple[SkewLaurentSeries, SkewLaurentSeries]:
    """Return (g*, N(g)) with g*g* = g**g = N(g) central."""
    if g.field.automorphism.order != 2:
        raise ShapeMismatch("central norm needs an automorphism of order 2")
    if not g.is_exact:
        raise ShapeMismatch("central norm needs an exact series")
    terms = {k: (c.sigma(1) if k % 2 == 0 else -c) for k, c in g.terms()}
    star = SkewLaurentSeries.from_terms(g.field, terms)
    return star, g * star


# -- polynomials in s = t^2 over K, coefficient lists from degree 0 up ---------

Poly = List[FieldElement]


def _trim(p: Poly) -> Poly:
    while p and p[-1].is_zero():
        p = p[:-1]
    return p


def _poly_divmod(p: Poly, d: Poly) -> Tuple[Poly, Poly]:
    field = d[-1].field
    lead_inv = d[-1].inverse()
    rem = list(p)
    quot = [field.zero] * max(0, len(p) - len(d) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        factor = rem[shift + len(d) - 1] * lead_inv
        quot[shift] = factor
        if factor.is_zero():
            continue
        for i, c in enumerate(d):
            rem[shift + i] = rem[shift + i] - factor * c
    return _trim(quot), _trim(rem[: len(d) - 1])


def _monic(p: Poly) -> Poly:
    inv = p[-1].inverse()
    return [c * inv for c in p]


def _poly_gcd(p: Poly, q: Poly) -> Poly:
    p, q = _trim(p), _trim(q)
    while q:
        p, q = q, _poly_divmod(p, q)[1]
    return _monic(p) if p else p


def _window(terms: Dict[int, FieldElement]) -> Tuple[int, Poly]:
    """Laurent polynomial in s as (lowest exponent, coefficients from there)."""
    lo = min(terms)
    field = terms[lo].field
    return lo, [terms.get(k, field.zero) for k in range(lo, max(terms) + 1)]


def _split(f: SkewLaurentSeries) -> Tuple[Dict[int, FieldElement], Dict[int, FieldElement]]:
    """f = A(s) + B(s)*t with s = t^2, coefficients on the left."""
    even, odd = {}, {}
    for k, c in f.terms():
        if k % 2 == 0:
            even[k // 2] = c
        else:
            odd[(k - 1) // 2] = c
    return even, odd


def _divide_out(terms: Dict[int, FieldElement], h: Poly) -> Dict[int, FieldElement]:
    if not terms:
        return {}
    lo, poly = _window(terms)
    quot, rem = _poly_divmod(poly, h)
    if rem:
        raise ShapeMismatch("central factor does not divide the numerator")
    return {lo + i: c for i, c in enumerate(quot) if not c.is_zero()}


def _cancel_central(num: SkewLaurentSeries, den: SkewLaurentSeries) -> Tuple[SkewLaurentSeries, SkewLaurentSeries]:
    """Remove the largest sigma-fixed polynomial factor in s shared by num and den.

    g = gcd(A, B, den) over K[s]; h = gcd(g, sigma(g)) is monic and sigma-fixed,
    hence central, and num*den^-1 = (num/h)*(den/h)^-1.
    """
    den_even, den_odd = _split(den)
    if den_odd or not den.is_exact:
        return num, den
    even, odd = _split(num)
    g = _window(den_even)[1]
    for part in (even, odd):
        if part:
            g = _poly_gcd(g, _window(part)[1])
        if len(g) <= 1:
            return num, den
    h = _poly_gcd(g, [c.sigma(1) for c in g])
    if len(h) <= 1:
        return num, den
    field = num.field
    terms: Dict[int, FieldElement] = {}
    for k, c in _divide_out(even, h).items():
        terms[2 * k] = c
    for k, c in _divide_out(odd, h).items():
        terms[2 * k + 1] = c
    reduced_den = {2 * k: c for k, c in _divide_out(den_even, h).items()}
    return SkewLaurentSeries.from_terms(field, terms), SkewLaurentSeries.from_terms(field, reduced_den)


@dataclass(frozen=True, eq=False)
class SkewFraction:
    """num * den^{-1}; den is exact, nonzero and central."""

    num: SkewLaurentSeries
    den: SkewLaurentSeries

    @classmethod
    def make(cls, num: SkewLaurentSeries, den: SkewLaurentSeries) -> "SkewFraction":
        field = num.field
        one = SkewLaurentSeries.constant(field.one)
        if den.is_zero():
            raise DivisionByZero("fraction denominator")
        if num.is_zero():
            return cls(SkewLaurentSeries.zero(field), one)
        if not den.is_monomial() and num.is_exact:
            num, den = _cancel_central(num, den)
        # scale den to valuation 0 and leading coefficient 1 by a central monomial
        if den.is_monomial():
            return cls(num * den.inverse(), one)
        lead = SkewLaurentSeries.monomial(den.leading_coefficient, den.valuation).inverse()
        return cls(num * lead, den * lead)

    @property
    def field(self) -> BaseField:
        return self.num.field

    def _lift(self, other: Any) -> "SkewFraction":
        if isinstance(other, SkewFraction):
            return other
        if isinstance(other, SkewLaurentSeries):
            return SkewFraction.make(other, SkewLaurentSeries.constant(self.field.one))
        if isinstance(other, FieldElement):
            return SkewFraction.make(SkewLaurentSeries.constant(other), SkewLaurentSeries.constant(self.field.one))
        return NotImplemented

    def __add__(self, other: Any) -> "SkewFraction":
        o = self._lift(other)
        if self.den == o.den:
            return SkewFraction.make(self.num + o.num, self.den)
        return SkewFraction.make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "SkewFraction":
        return SkewFraction(-self.num, self.den)

    def __sub__(self, other: Any) -> "SkewFraction":
        return self + (-self._lift(other))

    def __mul__(self, other: Any) -> "SkewFraction":
        o = self._lift(other)
        return SkewFraction.make(self.num * o.num, self.den * o.den)

    def inverse(self) -> "SkewFraction":
        if self.num.is_zero():
            raise DivisionByZero("skew Laurent element")
        if self.num.is_monomial():
            return SkewFraction.make(self.den * self.num.inverse(), SkewLaurentSeries.constant(self.field.one))
        star, norm = central_norm(self.num)
        return SkewFraction.make(self.den * star, norm)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: Any) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant() and self.den.leading_coefficient == self.field.one

    def as_series(self, policy: Optional[PrecisionPolicy] = None) -> SkewLaurentSeries:
        """Expand into a skew Laurent series, exact when the denominator is 1."""
        if self.is_polynomial:
            return self.num
        return self.num * self.den.inverse(policy)

    def constant_value(self) -> Optional[FieldElement]:
        """The field element this equals, if it is a constant."""
        if self.is_polynomial and self.num.is_constant():
            return self.num.leading_coefficient
        return None

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) * ({self.den})^-1"

    def __repr__(self):
        return f"SkewFraction({self})"


class SkewLaurentField(DivisionRing):
    """D = K((t, sigma)) restricted to the exactly representable subfield."""

    def __init__(self, base: BaseField, policy: Optional[PrecisionPolicy] = None, support: Tuple[int, int] = (-1, 1)):
        if base.automorphism.order != 2:
            raise ShapeMismatch(f"{base.name}: exact inverses need an automorphism of order 2")
        self.base = base
        self.policy = policy or PrecisionPolicy()
        self.support = support
        self.name = f"{base.name}((t,sigma))"

    @property
    def zero(self) -> SkewFraction:
        return self.from_series(SkewLaurentSeries.zero(self.base))

    @property
    def one(self) -> SkewFraction:
        return self.constant(self.base.one)

    @property
    def t(self) -> SkewFraction:
        return self.from_series(SkewLaurentSeries.t(self.base))

    def from_series(self, s: SkewLaurentSeries) -> SkewFraction:
        if not s.is_exact:
            raise ShapeMismatch("only exact series embed into the exact division ring")
        return SkewFraction.make(s, SkewLaurentSeries.constant(self.base.one))

    def constant(self, u: FieldElement) -> SkewFraction:
        return self.from_series(SkewLaurentSeries.constant(u))

    def monomial(self, u: FieldElement, exponent: int) -> SkewFraction:
        return self.from_series(SkewLaurentSeries.monomial(u, exponent))

    def coerce(self, value: Any) -> SkewFraction:
        if isinstance(value, SkewFraction):
            return value
        if isinstance(value, SkewLaurentSeries):
            return self.from_series(value)
        if isinstance(value, FieldElement):
            return self.constant(value)
        if isinstance(value, int):
            return self.constant(self.base.from_int(value))
        raise TypeError(f"Cannot coerce {type(value).__name__} into {self.name}")

    def from_int(self, n: int) -> SkewFraction:
        return self.constant(self.base.from_int(n))

    def random_element(self, rng: random.Random, terms: int = 2) -> SkewFraction:
        lo, hi = self.support
        chosen = {}
        for _ in range(rng.randint(1, terms)):
            chosen[rng.randint(lo, hi)] = self.base.random_element(rng)
        return self.from_series(SkewLaurentSeries.from_terms(self.base, chosen))

    def random_nonzero(self, rng: random.Random) -> SkewFraction:
        while True:
            e = self.random_element(rng)
            if not e.is_zero():
                return e

    def equal(self, a: SkewFraction, b: SkewFraction) -> bool:
        return a == b

    def parse(self, raw: Any) -> SkewFraction:
        try:
            if isinstance(raw, dict) and "num" in raw:
                num = SkewLaurentSeries.from_json(self.base, raw["num"])
                den = SkewLaurentSeries.from_json(self.base, raw.get("den", "1"))
                if not num.is_exact or not den.is_central() or den.is_zero():
                    raise ParseError("fraction", "numerator must be exact, denominator a nonzero central series")
                return SkewFraction.make(num, den)
            return self.from_series(SkewLaurentSeries.from_json(self.base, raw))
        except (ShapeMismatch, PrecisionExhausted) as e:
            raise ParseError("element of " + self.name, e.message)

    def encode(self, a: SkewFraction) -> Any:
        if a.is_polynomial:
            return a.num.to_json()
        return {"num": a.num.to_json(), "den": a.den.to_json()}
