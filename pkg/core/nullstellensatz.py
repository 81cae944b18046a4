"""Evaluation ideals <x_1 - a_1, ..., x_n - a_n> of D[x_1, ..., x_n] and the quaternion check.

The evaluation ideal at (a_1, ..., a_n) is proper exactly when the a_i
commute pairwise, and is then maximal. Over rational quaternions the
quadratic (x-a)(x-b) with c-compatible coefficients always has a zero in
the centralizer of c once the discriminant is a square there.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from core.errors import NonCommutingPoint, VerificationError, WitnessError
from core.laurent import SkewLaurentSeries, sl_commutes
from core.multipoly import MultiPoly
from core.progress import log_verbose
from core.quaternion import QuaternionRing, RationalQuaternion, random_quaternion
from core.ring import DivisionRing
from core.settings import derive_rng


@dataclass(frozen=True, eq=False)
class Point:
    ring: DivisionRing
    coords: Tuple[Any, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a point needs at least one coordinate")

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json(self) -> List[Any]:
        return [self.ring.encode(a) for a in self.coords]


def _commute(ring: DivisionRing, a: Any, b: Any) -> bool:
    if isinstance(a, SkewLaurentSeries):
        return sl_commutes(a, b).equal
    return ring.commutes(a, b)


def non_commuting_pair(p: Point) -> Optional[Tuple[int, int]]:
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if not _commute(p.ring, p.coords[i], p.coords[j]):
                return i, j
    return None


def is_commuting_point(p: Point) -> bool:
    return non_commuting_pair(p) is None


@dataclass(frozen=True)
class ModuleCertificate:
    """The quotient is D with x_k acting as right multiplication by a_k."""

    n: int
    checks: Tuple[str, ...]

    def to_json(self) -> Dict[str, Any]:
        return {"module_dimension": 1, "n": self.n, "checks": list(self.checks)}


@dataclass(frozen=True, eq=False)
class EvaluationUnitWitness:
    """sum_k h_k*(x_k - a_k) = 1, built from the non-commuting pair (i, j)."""

    i: int
    j: int
    kappa: Any
    coefficients: Dict[int, MultiPoly]

    def expand(self, p: Point) -> MultiPoly:
        total = MultiPoly.zero(p.ring, p.n)
        for k, h in self.coefficients.items():
            total = total + h * MultiPoly.linear(p.ring, p.n, k, p.coords[k])
        return total

    def verify(self, p: Point) -> bool:
        return self.expand(p) == MultiPoly.constant(p.ring, p.n, p.ring.one)

    def to_json(self, ring: DivisionRing) -> Dict[str, Any]:
        return {
            "pair": [self.i, self.j],
            "kappa": ring.encode(self.kappa),
            "coefficients": {str(k): h.to_json() for k, h in sorted(self.coefficients.items())},
        }


@dataclass(frozen=True, eq=False)
class EvaluationCertificate:
    proper: bool
    module: Optional[ModuleCertificate] = None
    unit: Optional[EvaluationUnitWitness] = None

    @property
    def verdict(self) -> str:
        return "proper_maximal" if self.proper else "improper"


def commutator_identity(p: Point, i: int, j: int) -> Tuple[MultiPoly, Any]:
    """(x_j - a_j)(x_i - a_i) - (x_i - a_i)(x_j - a_j) and the constant a_j a_i - a_i a_j."""
    ring, n = p.ring, p.n
    li = MultiPoly.linear(ring, n, i, p.coords[i])
    lj = MultiPoly.linear(ring, n, j, p.coords[j])
    return lj * li - li * lj, p.coords[j] * p.coords[i] - p.coords[i] * p.coords[j]


def module_action(f: MultiPoly, v: Any, p: Point) -> Any:
    """f acting on v in the left D-module D where x_k acts by right multiplication by a_k."""
    total = p.ring.zero
    for exp, c in f.items():
        image = v
        for k, e in enumerate(exp):
            for _ in range(e):
                image = image * p.coords[k]
        total = total + c * image
    return total


def evaluation_ideal_certificate(p: Point, rng: Optional[random.Random] = None, samples: int = 4) -> EvaluationCertificate:
    ring, n = p.ring, p.n
    pair = non_commuting_pair(p)
    if pair is None:
        checks = []
        for k, a in enumerate(p.coords):
            if not ring.is_zero(module_action(MultiPoly.linear(ring, n, k, a), ring.one, p)):
                raise VerificationError(f"x_{k + 1} - a_{k + 1} does not annihilate 1")
        checks.append("every x_k - a_k annihilates 1")
        rng = rng or random.Random(0)
        vectors = [ring.random_element(rng) for _ in range(samples)]
        for v in vectors:
            for i in range(n):
                for j in range(i + 1, n):
                    if not ring.equal((v * p.coords[i]) * p.coords[j], (v * p.coords[j]) * p.coords[i]):
                        raise VerificationError(f"actions of x_{i + 1} and x_{j + 1} do not commute")
        checks.append(f"right multiplications by a_1..a_{n} commute pairwise on {samples} samples")
        for v in vectors:
            d = ring.random_element(rng)
            for a in p.coords:
                if not ring.equal((d * v) * a, d * (v * a)):
                    raise VerificationError("x-action is not left D-linear")
        checks.append(f"actions are left D-linear on {samples} samples")
        return EvaluationCertificate(True, module=ModuleCertificate(n, tuple(checks)))

    i, j = pair
    expansion, kappa = commutator_identity(p, i, j)
    if expansion != MultiPoly.constant(ring, n, kappa):
        raise VerificationError(f"commutator of x_{i + 1} - a_{i + 1} and x_{j + 1} - a_{j + 1} is not constant")
    k_inv = MultiPoly.constant(ring, n, kappa.inverse())
    witness = EvaluationUnitWitness(
        i,
        j,
        kappa,
        {
            i: k_inv * MultiPoly.linear(ring, n, j, p.coords[j]),
            j: -(k_inv * MultiPoly.linear(ring, n, i, p.coords[i])),
        },
    )
    if not witness.verify(p):
        raise WitnessError("evaluation unit", "1")
    return EvaluationCertificate(False, unit=witness)


def _monomial_value(p: Point, exp: Tuple[int, ...], order: List[int]) -> Any:
    value = p.ring.one
    for k in order:
        for _ in range(exp[k]):
            value = value * p.coords[k]
    return value


def substitute_at_commuting_point(f: MultiPoly, p: Point) -> Any:
    """sum c_alpha a^alpha, checked against the reversed multiplication order."""
    pair = non_commuting_pair(p)
    if pair is not None:
        raise NonCommutingPoint(pair[0] + 1, pair[1] + 1)
    ring = p.ring
    forward, backward = list(range(p.n)), list(reversed(range(p.n)))
    total = ring.zero
    for exp, c in f.items():
        value = _monomial_value(p, exp, forward)
        if not ring.equal(value, _monomial_value(p, exp, backward)):
            raise VerificationError(f"monomial {exp} depends on multiplication order")
        total = total + c * value
    return total


def reduce_modulo_point(f: MultiPoly, p: Point) -> Any:
    """Constant remainder of f after right division by x_1 - a_1, ..., x_n - a_n in turn."""
    remainder = f
    for k, a in enumerate(p.coords):
        _, remainder = remainder.divide_by_linear(k, a)
    return remainder.coeff((0,) * p.n)


# -- quaternion check ----------------------------------------------------------


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def sqrt_in_centralizer(d0: Fraction, d1: Fraction, delta: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
    """Solve (A + B*e)^2 = d0 + d1*e where e^2 = -delta, delta > 0, over Q."""
    if d1 == 0:
        root = rational_sqrt(d0)
        if root is not None:
            return root, Fraction(0)
        root = rational_sqrt(-d0 / delta)
        if root is not None:
            return Fraction(0), root
        return None
    s = rational_sqrt(d0 * d0 + delta * d1 * d1)
    if s is None:
        return None
    alpha = rational_sqrt((d0 + s) / 2)
    if alpha is None or alpha == 0:
        return None
    return alpha, d1 / (2 * alpha)


@dataclass(frozen=True)
class RemarkReport:
    cond_a: bool
    cond_b: bool
    c_central: bool
    p_in_qc: bool
    root: Optional[RationalQuaternion]
    root_commutes: Optional[bool]
    verdict: str  # fails_c | conditions_not_met | undetermined

    @property
    def fully_certified(self) -> bool:
        return self.cond_a and self.cond_b and not self.c_central and self.verdict not in ("fails_c", "undetermined")

    def to_json(self) -> Dict[str, Any]:
        ring = QuaternionRing()
        return {
            "conditions_ab": {"a": self.cond_a, "b": self.cond_b},
            "c_central": self.c_central,
            "p_in_Qc": self.p_in_qc,
            "root_in_Qc": ring.encode(self.root) if self.root is not None else None,
            "root_commutes_with_c": self.root_commutes,
            "verdict": self.verdict,
        }


def _is_zero_of(r: RationalQuaternion, s: RationalQuaternion, m: RationalQuaternion) -> bool:
    return (r * r - s * r + m).is_zero()


def quaternion_remark_check(a: RationalQuaternion, b: RationalQuaternion, c: RationalQuaternion) -> RemarkReport:
    s, m = a + b, a * b
    cond_a = (a * b * c - c * a * b).is_zero()
    cond_b = (c * s - s * c).is_zero()
    c_central = c.is_central()
    if not (cond_a and cond_b):
        return RemarkReport(cond_a, cond_b, c_central, False, None, None, "conditions_not_met")
    if c_central:
        # b is a zero of (x-a)(x-b) and commutes with everything central
        return RemarkReport(True, True, True, True, b, True, "fails_c")

    s_coords, m_coords = s.in_centralizer_coords(c), m.in_centralizer_coords(c)
    if s_coords is None or m_coords is None:
        raise VerificationError("coefficients of p satisfy (a), (b) but leave the centralizer of c")
    # rewrite alpha + beta*c as A + B*e with e = c - c.r, e^2 = -delta
    delta = c.norm() - c.r * c.r
    s0, s1 = s_coords[0] + s_coords[1] * c.r, s_coords[1]
    m0, m1 = m_coords[0] + m_coords[1] * c.r, m_coords[1]
    # disc = s^2 - 4m in Q(e)
    d0 = s0 * s0 - delta * s1 * s1 - 4 * m0
    d1 = 2 * s0 * s1 - 4 * m1
    root_coords = sqrt_in_centralizer(d0, d1, delta)
    if root_coords is None:
        return RemarkReport(True, True, False, True, None, None, "undetermined")
    e = c - RationalQuaternion(c.r)
    sqrt_disc = RationalQuaternion(root_coords[0]) + e.scale(root_coords[1])
    r = (s + sqrt_disc).scale(Fraction(1, 2))
    if not _is_zero_of(r, s, m):
        raise VerificationError(f"quadratic formula root {r} is not a zero of p")
    commutes = (r * c - c * r).is_zero()
    if not commutes:
        raise VerificationError(f"root {r} in Q(c) does not commute with c")
    return RemarkReport(True, True, False, True, r, True, "fails_c")


SWEEP_FAMILIES = ("random", "opposite_imaginary", "conjugate")


def _pure_imaginary(rng: random.Random, height: int) -> RationalQuaternion:
    while True:
        q = random_quaternion(rng, height)
        v = RationalQuaternion(0, q.i, q.j, q.k)
        if not v.is_zero():
            return v


def sweep_triple(family: str, rng: random.Random, height: int = 3):
    c = random_quaternion(rng, height)
    if family == "random":
        return random_quaternion(rng, height), random_quaternion(rng, height), c
    if family == "opposite_imaginary":
        b = _pure_imaginary(rng, height)
        return -b, b, c
    if family == "conjugate":
        b = random_quaternion(rng, height)
        return b.conjugate(), b, c
    raise ValueError(f"Unknown sweep family: {family}")


@dataclass
class SweepReport:
    trials: int
    seed: int
    histogram: Dict[str, int] = field(default_factory=dict)
    by_family: Dict[str, Dict[str, int]] = field(default_factory=dict)
    fully_certified: int = 0
    roots_verified: int = 0
    examples: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.fully_certified == 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "histogram": dict(sorted(self.histogram.items())),
            "by_family": {k: dict(sorted(v.items())) for k, v in sorted(self.by_family.items())},
            "fully_certified": self.fully_certified,
            "roots_verified": self.roots_verified,
            "examples": self.examples,
            "evidence_only": True,
            "note": "A sweep is evidence, not a proof: zeros outside Q(c) are reported undetermined.",
            "overall": "pass" if self.passed else "fail",
        }


def remark_sweep(trials: int, seed: int = 0, height: int = 3, progress=None) -> SweepReport:
    report = SweepReport(trials, seed)
    ring = QuaternionRing()
    for index in range(trials):
        family = SWEEP_FAMILIES[index % len(SWEEP_FAMILIES)]
        a, b, c = sweep_triple(family, derive_rng(seed, "remark", index), height)
        result = quaternion_remark_check(a, b, c)
        report.histogram[result.verdict] = report.histogram.get(result.verdict, 0) + 1
        per_family = report.by_family.setdefault(family, {})
        per_family[result.verdict] = per_family.get(result.verdict, 0) + 1
        report.fully_certified += result.fully_certified
        if result.verdict == "fails_c" and result.root_commutes:
            report.roots_verified += 1
        if result.verdict not in report.examples:
            report.examples[result.verdict] = {
                "a": ring.encode(a),
                "b": ring.encode(b),
                "c": ring.encode(c),
                "report": result.to_json(),
            }
        if progress is not None:
            progress(index)
    log_verbose(f"remark sweep verdicts: {report.histogram}")
    return report


def quaternion_point(*coords: RationalQuaternion) -> Point:
    return Point(QuaternionRing(), tuple(coords))
