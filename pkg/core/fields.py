"""Exact base fields equipped with an automorphism sigma.

Two fields are shipped: GF(4) = GF(2)[w]/(w^2 + w + 1) with the Frobenius
u -> u^2, and the Gaussian rationals Q(i) with complex conjugation. Both
automorphisms have order 2.
"""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Iterator, List

from core.errors import DivisionByZero, ParseError


class AutomorphismKind(str, Enum):
    FROBENIUS = "frobenius"
    CONJUGATION = "conjugation"


@dataclass(frozen=True)
class AutomorphismTag:
    kind: AutomorphismKind
    order: int


class FieldElement(ABC):
    """Element of a base field K; immutable."""

    @property
    @abstractmethod
    def field(self) -> "BaseField": ...

    @abstractmethod
    def __add__(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def __neg__(self) -> "FieldElement": ...

    @abstractmethod
    def __mul__(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def inverse(self) -> "FieldElement": ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def _sigma_once(self) -> "FieldElement": ...

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def sigma(self, power: int = 1) -> "FieldElement":
        """Return sigma^power(self); negative powers reduce modulo the order."""
        result = self
        for _ in range(power % self.field.automorphism.order):
            result = result._sigma_once()
        return result


@dataclass(frozen=True)
class Gf4Element(FieldElement):
    # bit 0 is the constant coefficient, bit 1 the coefficient of w
    value: int

    def __post_init__(self):
        if not 0 <= self.value <= 3:
            raise ValueError(f"GF(4) element encoding out of range: {self.value}")

    @property
    def field(self) -> "BaseField":
        return GF4

    def __add__(self, other: FieldElement) -> "Gf4Element":
        return Gf4Element(self.value ^ _as_gf4(other).value)

    def __neg__(self) -> "Gf4Element":
        return self

    def __mul__(self, other: FieldElement) -> "Gf4Element":
        o = _as_gf4(other).value
        a0, a1 = self.value & 1, self.value >> 1
        b0, b1 = o & 1, o >> 1
        # w^2 = w + 1
        c0 = (a0 & b0) ^ (a1 & b1)
        c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
        return Gf4Element(c0 | (c1 << 1))

    def inverse(self) -> "Gf4Element":
        if self.value == 0:
            raise DivisionByZero("GF(4) element")
        # e^3 = 1 for e != 0
        return self * self

    def is_zero(self) -> bool:
        return self.value == 0

    def _sigma_once(self) -> "Gf4Element":
        return self * self

    def __str__(self):
        return _GF4_NAMES[self.value]


_GF4_NAMES = ("0", "1", "w", "w+1")


def _as_gf4(e: FieldElement) -> Gf4Element:
    if not isinstance(e, Gf4Element):
        raise TypeError(f"Cannot mix GF(4) with {type(e).__name__}")
    return e


@dataclass(frozen=True)
class GaussianRational(FieldElement):
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @property
    def field(self) -> "BaseField":
        return GAUSSIAN

    def __add__(self, other: FieldElement) -> "GaussianRational":
        o = _as_gaussian(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: FieldElement) -> "GaussianRational":
        o = _as_gaussian(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise DivisionByZero("Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def _sigma_once(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        if self.re == 0:
            return imag if self.im > 0 else f"-{imag}"
        return f"{self.re}{'+' if self.im > 0 else '-'}{imag}"


def _as_gaussian(e: FieldElement) -> GaussianRational:
    if not isinstance(e, GaussianRational):
        raise TypeError(f"Cannot mix Gaussian rationals with {type(e).__name__}")
    return e


class BaseField(ABC):
    """A base field K together with its automorphism sigma."""

    name: str
    automorphism: AutomorphismTag
    is_finite: bool

    @property
    @abstractmethod
    def zero(self) -> FieldElement: ...

    @property
    @abstractmethod
    def one(self) -> FieldElement: ...

    @property
    @abstractmethod
    def moved_element(self) -> FieldElement:
        """Default c with c^sigma != c."""

    @abstractmethod
    def elements(self) -> Iterator[FieldElement]: ...

    @abstractmethod
    def random_element(self, rng: random.Random, height: int = 3) -> FieldElement: ...

    @abstractmethod
    def parse(self, raw: Any) -> FieldElement: ...

    @abstractmethod
    def encode(self, e: FieldElement) -> Any: ...

    def from_int(self, n: int) -> FieldElement:
        result = self.zero
        unit = self.one if n >= 0 else -self.one
        for _ in range(abs(n)):
            result = result + unit
        return result

    def is_fixed(self, e: FieldElement) -> bool:
        return e.sigma(1) == e

    def nonzero_elements(self) -> List[FieldElement]:
        return [e for e in self.elements() if not e.is_zero()]

    def __repr__(self):
        return f"<{self.name} with {self.automorphism.kind.value} of order {self.automorphism.order}>"


class Gf4Field(BaseField):
    name = "gf4"
    automorphism = AutomorphismTag(AutomorphismKind.FROBENIUS, 2)
    is_finite = True

    @property
    def zero(self) -> Gf4Element:
        return Gf4Element(0)

    @property
    def one(self) -> Gf4Element:
        return Gf4Element(1)

    @property
    def w(self) -> Gf4Element:
        return Gf4Element(2)

    @property
    def moved_element(self) -> Gf4Element:
        return self.w

    def from_int(self, n: int) -> Gf4Element:
        return Gf4Element(n & 1)

    def elements(self) -> Iterator[Gf4Element]:
        return (Gf4Element(v) for v in range(4))

    def random_element(self, rng: random.Random, height: int = 3) -> Gf4Element:
        return Gf4Element(rng.randrange(4))

    def parse(self, raw: Any) -> Gf4Element:
        text = str(raw).replace(" ", "")
        if text == "1+w":
            text = "w+1"
        if text not in _GF4_NAMES:
            raise ParseError("GF(4) element", f"{raw!r} is not one of 0, 1, w, w+1")
        return Gf4Element(_GF4_NAMES.index(text))

    def encode(self, e: FieldElement) -> str:
        return str(_as_gf4(e))


class GaussianField(BaseField):
    name = "gaussian"
    automorphism = AutomorphismTag(AutomorphismKind.CONJUGATION, 2)
    is_finite = False

    @property
    def zero(self) -> GaussianRational:
        return GaussianRational(0, 0)

    @property
    def one(self) -> GaussianRational:
        return GaussianRational(1, 0)

    @property
    def i(self) -> GaussianRational:
        return GaussianRational(0, 1)

    @property
    def moved_element(self) -> GaussianRational:
        return self.i

    def from_int(self, n: int) -> GaussianRational:
        return GaussianRational(n, 0)

    def elements(self) -> Iterator[GaussianRational]:
        raise TypeError("Q(i) is infinite")

    def random_element(self, rng: random.Random, height: int = 3) -> GaussianRational:
        return GaussianRational(
            Fraction(rng.randint(-height, height), rng.randint(1, height)),
            Fraction(rng.randint(-height, height), rng.randint(1, height)),
        )

    def parse(self, raw: Any) -> GaussianRational:
        try:
            if isinstance(raw, dict):
                return GaussianRational(Fraction(str(raw.get("re", "0"))), Fraction(str(raw.get("im", "0"))))
            text = str(raw).replace(" ", "")
            if text in ("i", "+i"):
                return self.i
            if text == "-i":
                return -self.i
            return GaussianRational(Fraction(text), 0)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError("Gaussian rational", str(e))

    def encode(self, e: FieldElement) -> dict:
        g = _as_gaussian(e)
        return {"re": str(g.re), "im": str(g.im)}


GF4 = Gf4Field()
GAUSSIAN = GaussianField()

FIELDS = {GF4.name: GF4, GAUSSIAN.name: GAUSSIAN}


def get_field(name: str) -> BaseField:
    if name not in FIELDS:
        raise ParseError("field name", f"{name!r} is not one of {', '.join(FIELDS)}")
    return FIELDS[name]


def field_arith(op: str, lhs: FieldElement, rhs: FieldElement) -> FieldElement:
    """Dispatch add|sub|mul|inv; inv ignores rhs."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "inv":
        return lhs.inverse()
    raise ValueError(f"Unknown field operation: {op}")


def apply_sigma(e: FieldElement, power: int) -> FieldElement:
    return e.sigma(power)
