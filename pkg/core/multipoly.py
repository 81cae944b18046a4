"""Sparse polynomials in n central variables over a division ring.

Monomials commute with each other and with D, so a term is a left
coefficient times an exponent vector; multiplication multiplies
coefficients in D (order matters) and adds exponent vectors.
"""

import random
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Tuple

from core.errors import ParseError
from core.ring import DivisionRing
from core.skewpoly import CentralPoly

Exponent = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class MultiPoly:
    ring: DivisionRing
    nvars: int
    # sorted by exponent vector, zero coefficients never stored
    terms: Tuple[Tuple[Exponent, Any], ...]

    @classmethod
    def build(cls, ring: DivisionRing, nvars: int, mapping: Dict[Exponent, Any]) -> "MultiPoly":
        items = []
        for exp in sorted(mapping):
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = ring.coerce(mapping[exp])
            if not c.is_zero():
                items.append((exp, c))
        return cls(ring, nvars, tuple(items))

    def _new(self, mapping: Dict[Exponent, Any]) -> "MultiPoly":
        return type(self).build(self.ring, self.nvars, mapping)

    @classmethod
    def zero(cls, ring: DivisionRing, nvars: int) -> "MultiPoly":
        return cls(ring, nvars, ())

    @classmethod
    def constant(cls, ring: DivisionRing, nvars: int, c: Any) -> "MultiPoly":
        return cls.build(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, ring: DivisionRing, nvars: int, k: int) -> "MultiPoly":
        exp = tuple(1 if i == k else 0 for i in range(nvars))
        return cls.build(ring, nvars, {exp: ring.one})

    @classmethod
    def linear(cls, ring: DivisionRing, nvars: int, k: int, a: Any) -> "MultiPoly":
        """x_k - a."""
        return cls.variable(ring, nvars, k) - cls.constant(ring, nvars, a)

    @classmethod
    def random(
        cls, ring: DivisionRing, nvars: int, rng: random.Random, max_degree: int = 2, max_terms: int = 4
    ) -> "MultiPoly":
        mapping: Dict[Exponent, Any] = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = tuple(rng.randint(0, max_degree) for _ in range(nvars))
            mapping[exp] = ring.random_element(rng)
        return cls.build(ring, nvars, mapping)

    def items(self) -> Iterator[Tuple[Exponent, Any]]:
        return iter(self.terms)

    def as_dict(self) -> Dict[Exponent, Any]:
        return dict(self.terms)

    def coeff(self, exp: Exponent) -> Any:
        for e, c in self.terms:
            if e == exp:
                return c
        return self.ring.zero

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, k: int) -> int:
        return max((e[k] for e, _ in self.terms), default=-1)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        mapping = self.as_dict()
        for exp, c in other.terms:
            mapping[exp] = mapping[exp] + c if exp in mapping else c
        return self._new(mapping)

    def __neg__(self) -> "MultiPoly":
        return self._new({e: -c for e, c in self.terms})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        mapping: Dict[Exponent, Any] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                exp = tuple(a + b for a, b in zip(e1, e2))
                term = c1 * c2
                mapping[exp] = mapping[exp] + term if exp in mapping else term
        return self._new(mapping)

    def scale_left(self, d: Any) -> "MultiPoly":
        d = self.ring.coerce(d)
        return self._new({e: d * c for e, c in self.terms})

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        diff = self - other
        return diff.is_zero()

    __hash__ = None  # type: ignore[assignment]

    def divide_by_linear(self, k: int, a: Any) -> Tuple["MultiPoly", "MultiPoly"]:
        """Right division by x_k - a: self = quotient*(x_k - a) + remainder, remainder free of x_k."""
        divisor = type(self).linear(self.ring, self.nvars, k, a)
        quotient = type(self).zero(self.ring, self.nvars)
        remainder = self
        while remainder.degree_in(k) >= 1:
            d = remainder.degree_in(k)
            lowered = {
                tuple(x - 1 if i == k else x for i, x in enumerate(e)): c for e, c in remainder.terms if e[k] == d
            }
            step = self._new(lowered)
            quotient = quotient + step
            remainder = remainder - step * divisor
        return quotient, remainder

    def to_json(self) -> Dict[str, Any]:
        return {"nvars": self.nvars, "terms": [[list(e), self.ring.encode(c)] for e, c in self.terms]}

    @classmethod
    def from_json(cls, ring: DivisionRing, raw: Any, nvars: Optional[int] = None) -> "MultiPoly":
        try:
            n = int(raw.get("nvars", nvars if nvars is not None else 0))
            if nvars is not None and n != nvars:
                raise ParseError("polynomial", f"expected {nvars} variables, got {n}")
            mapping: Dict[Exponent, Any] = {}
            for exp, coeff in raw.get("terms", []):
                key = tuple(int(x) for x in exp)
                c = ring.parse(coeff)
                mapping[key] = mapping[key] + c if key in mapping else c
            return cls.build(ring, n, mapping)
        except (AttributeError, TypeError, ValueError) as e:
            raise ParseError("polynomial", str(e))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self._names()
        parts = []
        for exp, c in reversed(self.terms):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e > 0
            )
            if not mono:
                parts.append(f"({c})")
            elif self.ring.equal(c, self.ring.one):
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def _names(self) -> Tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.nvars))


class BiPoly(MultiPoly):
    """D[x, y]; exponent vectors are (i, j) for x^i y^j."""

    X, Y = 0, 1

    @classmethod
    def build(cls, ring: DivisionRing, nvars: int, mapping: Dict[Exponent, Any]) -> "BiPoly":
        if nvars != 2:
            raise ValueError("BiPoly has exactly two variables")
        return super().build(ring, 2, mapping)  # type: ignore[return-value]

    @classmethod
    def of(cls, ring: DivisionRing, mapping: Dict[Exponent, Any]) -> "BiPoly":
        return cls.build(ring, 2, mapping)

    @classmethod
    def x(cls, ring: DivisionRing) -> "BiPoly":
        return cls.of(ring, {(1, 0): ring.one})

    @classmethod
    def y(cls, ring: DivisionRing) -> "BiPoly":
        return cls.of(ring, {(0, 1): ring.one})

    @classmethod
    def const(cls, ring: DivisionRing, c: Any) -> "BiPoly":
        return cls.of(ring, {(0, 0): c})

    @classmethod
    def from_x_poly(cls, f: CentralPoly) -> "BiPoly":
        return cls.of(f.ring, {(i, 0): c for i, c in enumerate(f.coeffs)})

    def to_x_poly(self) -> CentralPoly:
        if self.degree_in(self.Y) > 0:
            raise ValueError("polynomial depends on y")
        coeffs = [self.ring.zero] * (self.degree_in(self.X) + 1)
        for (i, _), c in self.terms:
            coeffs[i] = c
        return CentralPoly.build(self.ring, coeffs)

    def _names(self) -> Tuple[str, ...]:
        return ("x", "y")
