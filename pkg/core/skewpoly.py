"""Polynomials in one central variable x over a division ring D.

Coefficients are written on the left and x commutes with D, so
(sum f_i x^i)(sum g_j x^j) = sum (f_i g_j) x^(i+j). Substitution
f(a) = sum f_i a^i is not a ring homomorphism; it obeys the product formula
(fg)(a) = f(a^{g(a)}) g(a) when g(a) != 0 and (fg)(a) = 0 when g(a) = 0,
where a^b = b a b^{-1}.
"""

import random
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple, Union

from core.errors import DivisionByZero, VerificationError
from core.ring import DivisionRing

# degree of the zero polynomial, standing in for -infinity
ZERO_DEGREE = -1


@dataclass(frozen=True, eq=False)
class CentralPoly:
    ring: DivisionRing
    # index = degree in x; trimmed so the last entry is nonzero
    coeffs: Tuple[Any, ...]

    @classmethod
    def build(cls, ring: DivisionRing, coeffs: Sequence[Any]) -> "CentralPoly":
        items = [ring.coerce(c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        return cls(ring, tuple(items))

    @classmethod
    def zero(cls, ring: DivisionRing) -> "CentralPoly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: DivisionRing, c: Any) -> "CentralPoly":
        return cls.build(ring, [c])

    @classmethod
    def x(cls, ring: DivisionRing) -> "CentralPoly":
        return cls.build(ring, [ring.zero, ring.one])

    @classmethod
    def linear(cls, ring: DivisionRing, v: Any) -> "CentralPoly":
        """x - v."""
        return cls.build(ring, [-ring.coerce(v), ring.one])

    @classmethod
    def monomial(cls, ring: DivisionRing, c: Any, degree: int) -> "CentralPoly":
        return cls.build(ring, [ring.zero] * degree + [c])

    @classmethod
    def random(cls, ring: DivisionRing, rng: random.Random, max_degree: int = 3) -> "CentralPoly":
        return cls.build(ring, [ring.random_element(rng) for _ in range(rng.randint(0, max_degree) + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def coeff(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.ring.equal(self.leading, self.ring.one)

    def __add__(self, other: "CentralPoly") -> "CentralPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return CentralPoly.build(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "CentralPoly":
        return CentralPoly(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "CentralPoly") -> "CentralPoly":
        return self + (-other)

    def __mul__(self, other: "CentralPoly") -> "CentralPoly":
        return poly_mul(self, other)

    def scale_left(self, d: Any) -> "CentralPoly":
        d = self.ring.coerce(d)
        return CentralPoly.build(self.ring, [d * c for c in self.coeffs])

    def scale_right(self, d: Any) -> "CentralPoly":
        d = self.ring.coerce(d)
        return CentralPoly.build(self.ring, [c * d for c in self.coeffs])

    def shift(self, n: int) -> "CentralPoly":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return CentralPoly(self.ring, tuple([self.ring.zero] * n) + self.coeffs)

    def monic(self) -> "CentralPoly":
        if self.is_zero():
            raise DivisionByZero("polynomial")
        return self.scale_left(self.leading.inverse())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CentralPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.ring.equal(a, b) for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def __call__(self, a: Any) -> Any:
        return evaluate(self, a)

    def to_json(self) -> Dict[str, Any]:
        return {"coeffs": [self.ring.encode(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, ring: DivisionRing, raw: Any) -> "CentralPoly":
        return cls.build(ring, [ring.parse(c) for c in raw.get("coeffs", [])])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                parts.append(f"({c})")
            elif self.ring.equal(c, self.ring.one):
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def poly_mul(f: CentralPoly, g: CentralPoly) -> CentralPoly:
    if f.is_zero() or g.is_zero():
        return CentralPoly.zero(f.ring)
    out = [f.ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if fi.is_zero():
            continue
        for j, gj in enumerate(g.coeffs):
            out[i + j] = out[i + j] + fi * gj
    return CentralPoly.build(f.ring, out)


def evaluate(f: CentralPoly, a: Any) -> Any:
    """f(a) = sum f_i a^i with the coefficient on the left of the power."""
    ring = f.ring
    a = ring.coerce(a)
    total = ring.zero
    power = ring.one
    for c in f.coeffs:
        total = total + c * power
        power = power * a
    return total


@dataclass(frozen=True)
class FormulaReport:
    lhs: Any
    rhs: Any
    g_value: Any
    branch: str  # "root" when g(a) = 0, "conjugate" otherwise
    holds: bool


def product_formula_check(f: CentralPoly, g: CentralPoly, a: Any) -> FormulaReport:
    ring = f.ring
    a = ring.coerce(a)
    lhs = evaluate(poly_mul(f, g), a)
    g_value = evaluate(g, a)
    if g_value.is_zero():
        return FormulaReport(lhs, ring.zero, g_value, "root", lhs.is_zero())
    rhs = evaluate(f, ring.conjugate(a, g_value)) * g_value
    return FormulaReport(lhs, rhs, g_value, "conjugate", ring.equal(lhs, rhs))


def divide_right(f: CentralPoly, d: CentralPoly) -> Tuple[CentralPoly, CentralPoly]:
    """Return (quotient, remainder) with f = quotient*d + remainder, deg remainder < deg d."""
    if d.is_zero():
        raise DivisionByZero("divisor polynomial")
    ring = f.ring
    lead_inv = d.leading.inverse()
    quotient: List[Any] = [ring.zero] * max(0, f.degree - d.degree + 1)
    remainder = f
    while remainder.degree >= d.degree:
        shift = remainder.degree - d.degree
        c = remainder.leading * lead_inv
        quotient[shift] = quotient[shift] + c
        remainder = remainder - d.scale_left(c).shift(shift)
    return CentralPoly.build(ring, quotient), remainder


def is_right_factor(f: CentralPoly, v: Any) -> bool:
    """x - v right-divides f; the evaluation and division criteria are cross-checked."""
    by_value = evaluate(f, v).is_zero()
    _, remainder = divide_right(f, CentralPoly.linear(f.ring, v))
    by_division = remainder.is_zero()
    if by_value != by_division:
        raise VerificationError(f"factor criteria disagree for {f} at {v}")
    return by_value


@dataclass(frozen=True)
class BezoutWitness:
    """p1*q + p2*(x - v) = 1."""

    p1: CentralPoly
    p2: CentralPoly
    v: Any

    def expand(self, q: CentralPoly) -> CentralPoly:
        return poly_mul(self.p1, q) + poly_mul(self.p2, CentralPoly.linear(q.ring, self.v))

    def verify(self, q: CentralPoly) -> bool:
        return self.expand(q) == CentralPoly.constant(q.ring, q.ring.one)


@dataclass(frozen=True)
class NotCoprime:
    v: Any


def bezout_with_linear(q: CentralPoly, v: Any) -> Union[BezoutWitness, NotCoprime]:
    ring = q.ring
    v = ring.coerce(v)
    s, q_at_v = divide_right(q, CentralPoly.linear(ring, v))
    r = q_at_v.coeff(0)
    if r.is_zero():
        return NotCoprime(v)
    r_inv = r.inverse()
    witness = BezoutWitness(CentralPoly.constant(ring, r_inv), s.scale_left(-r_inv), v)
    if not witness.verify(q):
        raise VerificationError(f"Bezout witness for {q} and x - ({v}) does not expand to 1")
    return witness

