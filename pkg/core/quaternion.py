"""Exact rational quaternions: Q-span of 1, i, j, k with i^2 = j^2 = -1, ij = -ji = k."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from core.errors import DivisionByZero, ParseError
from core.ring import DivisionRing


@dataclass(frozen=True)
class RationalQuaternion:
    r: Fraction = Fraction(0)
    i: Fraction = Fraction(0)
    j: Fraction = Fraction(0)
    k: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("r", "i", "j", "k"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def scalar(cls, value) -> "RationalQuaternion":
        return cls(Fraction(value))

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.r, self.i, self.j, self.k)

    @property
    def vector(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.i, self.j, self.k)

    def __add__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(*(x + y for x, y in zip(self.components, other.components)))

    def __sub__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(*(x - y for x, y in zip(self.components, other.components)))

    def __neg__(self) -> "RationalQuaternion":
        return RationalQuaternion(-self.r, -self.i, -self.j, -self.k)

    def __mul__(self, other: "RationalQuaternion") -> "RationalQuaternion":
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = other.components
        return RationalQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def scale(self, factor: Fraction) -> "RationalQuaternion":
        return RationalQuaternion(*(x * factor for x in self.components))

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.r, -self.i, -self.j, -self.k)

    def norm(self) -> Fraction:
        return sum((x * x for x in self.components), Fraction(0))

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("quaternion")
        return self.conjugate().scale(1 / n)

    def is_zero(self) -> bool:
        return not any(self.components)

    def is_central(self) -> bool:
        return not any(self.vector)

    def commutator(self, other: "RationalQuaternion") -> "RationalQuaternion":
        return self * other - other * self

    def in_centralizer_coords(self, c: "RationalQuaternion") -> Optional[Tuple[Fraction, Fraction]]:
        """Write self as alpha + beta*c when it commutes with non-central c, else None."""
        if c.is_central():
            raise ValueError("centralizer coordinates need a non-central c")
        if not self.commutator(c).is_zero():
            return None
        # self's vector part is parallel to c's
        pivot = next(n for n, x in enumerate(c.vector) if x != 0)
        beta = self.vector[pivot] / c.vector[pivot]
        alpha = self.r - beta * c.r
        return alpha, beta

    def __str__(self):
        parts = []
        for value, unit in zip(self.components, ("", "i", "j", "k")):
            if value == 0:
                continue
            if unit and abs(value) == 1:
                text = unit
            else:
                text = f"{abs(value)}{unit}"
            parts.append(("-" if value < 0 else "+") + text)
        if not parts:
            return "0"
        joined = "".join(parts)
        return joined[1:] if joined.startswith("+") else joined


ONE = RationalQuaternion(1)
I = RationalQuaternion(0, 1)
J = RationalQuaternion(0, 0, 1)
K = RationalQuaternion(0, 0, 0, 1)
BASIS = (ONE, I, J, K)


def quat_arith(op: str, p: RationalQuaternion, q: RationalQuaternion) -> RationalQuaternion:
    """Dispatch add|sub|mul|inv|commutator; inv ignores q."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "inv":
        return p.inverse()
    if op == "commutator":
        return p.commutator(q)
    raise ValueError(f"Unknown quaternion operation: {op}")


def random_quaternion(rng: random.Random, height: int = 3) -> RationalQuaternion:
    return RationalQuaternion(*(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(4)))


class QuaternionRing(DivisionRing):
    name = "quaternion"

    def __init__(self, height: int = 3):
        self.height = height

    @property
    def zero(self) -> RationalQuaternion:
        return RationalQuaternion()

    @property
    def one(self) -> RationalQuaternion:
        return ONE

    def from_int(self, n: int) -> RationalQuaternion:
        return RationalQuaternion.scalar(n)

    def random_element(self, rng: random.Random) -> RationalQuaternion:
        return random_quaternion(rng, self.height)

    def parse(self, raw: Any) -> RationalQuaternion:
        if not isinstance(raw, (list, tuple)) or len(raw) != 4:
            raise ParseError("quaternion", "expected four rational strings [r, i, j, k]")
        try:
            return RationalQuaternion(*(Fraction(str(x)) for x in raw))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError("quaternion", str(e))

    def encode(self, a: RationalQuaternion) -> list:
        return [str(x) for x in a.components]

    def equal(self, a: RationalQuaternion, b: RationalQuaternion) -> bool:
        return a == b
