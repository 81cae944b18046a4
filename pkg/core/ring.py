"""Division-ring abstraction shared by the polynomial layers.

Elements support ``+``, ``-``, ``*``, unary ``-``, ``inverse()`` and
``is_zero()``; the ring object supplies constants, equality, random sampling
and the JSON codec.
"""

import random
from abc import ABC, abstractmethod
from typing import Any


class DivisionRing(ABC):
    name: str

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def random_element(self, rng: random.Random) -> Any: ...

    @abstractmethod
    def parse(self, raw: Any) -> Any: ...

    @abstractmethod
    def encode(self, a: Any) -> Any: ...

    def coerce(self, value: Any) -> Any:
        return value

    def from_int(self, n: int) -> Any:
        result = self.zero
        unit = self.one if n >= 0 else -self.one
        for _ in range(abs(n)):
            result = result + unit
        return result

    def is_zero(self, a: Any) -> bool:
        return a.is_zero()

    def equal(self, a: Any, b: Any) -> bool:
        return (a - b).is_zero()

    def inverse(self, a: Any) -> Any:
        return a.inverse()

    def commutator(self, a: Any, b: Any) -> Any:
        return a * b - b * a

    def commutes(self, a: Any, b: Any) -> bool:
        return self.commutator(a, b).is_zero()

    def conjugate(self, a: Any, b: Any) -> Any:
        """Return a^b = b a b^{-1}."""
        return b * a * b.inverse()

    def power(self, a: Any, n: int) -> Any:
        result = self.one
        for _ in range(n):
            result = result * a
        return result

    def format(self, a: Any) -> str:
        return str(a)

    def __repr__(self):
        return f"<DivisionRing {self.name}>"
