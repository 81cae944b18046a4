"""Membership and unit-combination witnesses for M = <q, y - c> in D[x, y].

A witness is checked by plain expansion in D[x, y]; nothing about how it was
produced is trusted.
"""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, Optional, Union

from core.errors import ParseError
from core.multipoly import BiPoly
from core.ring import DivisionRing

if TYPE_CHECKING:
    from core.counterexample import InstanceParams


class WitnessKind(str, Enum):
    MEMBER = "member"
    UNIT_REMAINDER = "unit_remainder"
    COMMUTATOR_ROOT = "commutator_root"
    EUCLID_COPRIME = "euclid_coprime"


@dataclass(frozen=True, eq=False)
class MemberWitness:
    """f = g1*q + g2*(y - c)."""

    g1: BiPoly
    g2: BiPoly
    kind: WitnessKind = WitnessKind.MEMBER

    def expand(self, params: "InstanceParams") -> BiPoly:
        return self.g1 * params.q_bi + self.g2 * params.y_minus_c

    def verify(self, f: BiPoly, params: "InstanceParams") -> bool:
        return self.expand(params) == f

    def to_json(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "g1": self.g1.to_json(), "g2": self.g2.to_json()}


@dataclass(frozen=True, eq=False)
class UnitWitness:
    """h0*q + h1*(y - c) + h2*f = 1."""

    h0: BiPoly
    h1: BiPoly
    h2: BiPoly
    kind: WitnessKind
    kappa: Optional[Any] = None

    def expand(self, f: BiPoly, params: "InstanceParams") -> BiPoly:
        return self.h0 * params.q_bi + self.h1 * params.y_minus_c + self.h2 * f

    def verify(self, f: BiPoly, params: "InstanceParams") -> bool:
        if self.kind == WitnessKind.COMMUTATOR_ROOT and (self.kappa is None or self.kappa.is_zero()):
            return False
        return self.expand(f, params) == BiPoly.const(params.ring, params.ring.one)

    def to_json(self) -> Dict[str, Any]:
        ring = self.h0.ring
        data = {
            "kind": self.kind.value,
            "h0": self.h0.to_json(),
            "h1": self.h1.to_json(),
            "h2": self.h2.to_json(),
        }
        if self.kappa is not None:
            data["kappa"] = ring.encode(self.kappa)
        return data


Witness = Union[MemberWitness, UnitWitness]


def verify_witness(f: BiPoly, witness: Witness, params: "InstanceParams") -> bool:
    return witness.verify(f, params)


def witness_from_json(ring: DivisionRing, raw: Dict[str, Any]) -> Witness:
    try:
        kind = WitnessKind(raw["kind"])
        if kind == WitnessKind.MEMBER:
            return MemberWitness(BiPoly.from_json(ring, raw["g1"], 2), BiPoly.from_json(ring, raw["g2"], 2))
        kappa = ring.parse(raw["kappa"]) if "kappa" in raw else None
        return UnitWitness(
            BiPoly.from_json(ring, raw["h0"], 2),
            BiPoly.from_json(ring, raw["h1"], 2),
            BiPoly.from_json(ring, raw["h2"], 2),
            kind,
            kappa,
        )
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError("witness", str(e))
