"""The left ideal M = <(x-a)(x-b), y-c> of D[x, y] and its verification.

Given a, b, c in D with abc = cab, c(a+b) = (a+b)c and no zero of
(x-a)(x-b) commuting with c, M is a maximal left ideal while
M ∩ D[x] = D[x](x-a)(x-b) is not maximal in D[x]. Every step below produces
an object that can be re-checked by expansion.
"""

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from core.errors import (
    CertificateFailed,
    CLIError,
    ConditionViolation,
    FieldNotFinite,
    InvalidDepth,
    ShapeMismatch,
    VerificationError,
    WitnessError,
)
from core.fields import FieldElement
from core.laurent import CommutationReport, PrecisionPolicy, SkewLaurentSeries, sl_commutes
from core.multipoly import BiPoly
from core.progress import create_progress, log_verbose
from core.ring import DivisionRing
from core.settings import derive_rng
from core.skewfield import SkewLaurentField
from core.skewpoly import BezoutWitness, CentralPoly, bezout_with_linear, divide_right, evaluate, poly_mul
from core.witness import MemberWitness, UnitWitness, Witness, WitnessKind

ANNOTATIONS = [
    "Proof normalization 'replacing ux-v with ux-u^{-1}v' is read as left multiplication by u^{-1}, "
    "giving x-u^{-1}v; the printed form is treated as a typo.",
    "Proof line 'we have vc != vc' is read as vc != cv; the decision procedure checks cw - wc != 0.",
]


@dataclass(frozen=True, eq=False)
class InstanceParams:
    name: str
    ring: DivisionRing
    a: Any
    b: Any
    c: Any

    @cached_property
    def q(self) -> CentralPoly:
        """(x - a)(x - b), monic of degree 2."""
        return poly_mul(CentralPoly.linear(self.ring, self.a), CentralPoly.linear(self.ring, self.b))

    @cached_property
    def q_bi(self) -> BiPoly:
        return BiPoly.from_x_poly(self.q)

    @cached_property
    def y_minus_c(self) -> BiPoly:
        return BiPoly.y(self.ring) - BiPoly.const(self.ring, self.c)

    def to_json(self) -> Dict[str, Any]:
        return {
            "a": self.ring.encode(self.a),
            "b": self.ring.encode(self.b),
            "c": self.ring.encode(self.c),
            "q": self.q.to_json(),
        }


# -- conditions (a), (b) ----------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Any
    rhs: Any
    holds: bool

    def to_json(self, ring: DivisionRing) -> Dict[str, Any]:
        return {"identity": self.name, "lhs": ring.encode(self.lhs), "rhs": ring.encode(self.rhs), "holds": self.holds}


@dataclass(frozen=True)
class ConditionReport:
    a: IdentityCheck
    b: IdentityCheck

    @property
    def holds(self) -> bool:
        return self.a.holds and self.b.holds


def check_conditions_ab(params: InstanceParams) -> ConditionReport:
    ring, a, b, c = params.ring, params.a, params.b, params.c
    abc, cab = a * b * c, c * a * b
    s = a + b
    return ConditionReport(
        IdentityCheck("abc = cab", abc, cab, ring.equal(abc, cab)),
        IdentityCheck("c(a+b) = (a+b)c", c * s, s * c, ring.equal(c * s, s * c)),
    )


# -- condition (c) ------------------------------------------------------------


def _square_shape(params: InstanceParams) -> Tuple[SkewLaurentField, FieldElement]:
    """Require q = x^2 - t^2 and c a constant of K; return (ring, c as field element)."""
    ring = params.ring
    if not isinstance(ring, SkewLaurentField):
        raise ShapeMismatch("the structural condition (c) check needs D = K((t, sigma))")
    t = ring.t
    if not (params.a + params.b).is_zero() or not ring.equal(params.a * params.b, -(t * t)):
        raise ShapeMismatch(f"quadratic {params.q} is not of the shape x^2 - t^2")
    c = params.c.constant_value()
    if c is None:
        raise ShapeMismatch(f"c = {params.c} is not a constant of {ring.base.name}")
    return ring, c


@dataclass(frozen=True)
class StructuralReport:
    passed: bool
    c: FieldElement
    c_sigma: FieldElement
    c_sigma2_fixed: bool
    spot_checks: int
    trace: Tuple[str, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "verdict": "pass" if self.passed else "fail",
            "c": str(self.c),
            "c_sigma": str(self.c_sigma),
            "c_sigma2_is_c": self.c_sigma2_fixed,
            "spot_checks": self.spot_checks,
            "trace": list(self.trace),
        }


def condition_c_structural(params: InstanceParams, rng: Optional[random.Random] = None) -> StructuralReport:
    ring, c = _square_shape(params)
    base = ring.base
    c_sigma, c_sigma2 = c.sigma(1), c.sigma(2)
    trace: List[str] = []
    if c_sigma == c:
        trace.append(f"c^sigma = {c_sigma} equals c: every element of K commutes with c through the twist")
        return StructuralReport(False, c, c_sigma, c_sigma2 == c, 0, tuple(trace))
    trace.append(f"(i) c^sigma = {c_sigma} != {c} = c")
    trace.append(f"    c^(sigma^2) = {c_sigma2} {'=' if c_sigma2 == c else '!='} c")
    trace.append(
        "(ii) a zero f of x^2 - t^2 satisfies f*f = t^2; valuations add, so 2*val(f) = 2, "
        "val(f) = 1 and the leading coefficient f_1 is nonzero"
    )
    trace.append("(iii) the t-coefficient of f*c is f_1*c^sigma, of c*f is c*f_1; they differ since f_1 != 0")
    samples = base.nonzero_elements() if base.is_finite else [_random_nonzero(base, rng or random.Random(0)) for _ in range(16)]
    const_c = SkewLaurentSeries.constant(c)
    for f1 in samples:
        report = sl_commutes(SkewLaurentSeries.monomial(f1, 1), const_c)
        if report.equal or report.exponent != 1:
            trace.append(f"    spot check failed for f_1 = {f1}")
            return StructuralReport(False, c, c_sigma, c_sigma2 == c, len(samples), tuple(trace))
    trace.append(f"    spot-checked on {len(samples)} values of f_1")
    passed = c_sigma2 == c
    return StructuralReport(passed, c, c_sigma, c_sigma2 == c, len(samples), tuple(trace))


def _random_nonzero(base, rng: random.Random) -> FieldElement:
    while True:
        e = base.random_element(rng)
        if not e.is_zero():
            return e


@dataclass(frozen=True)
class RootPrefix:
    coeffs: Tuple[FieldElement, ...]
    series: SkewLaurentSeries
    commutation: CommutationReport

    def to_json(self) -> Dict[str, Any]:
        return {"coeffs": [str(x) for x in self.coeffs], "commutation": self.commutation.to_json()}


def condition_c_enumerative(params: InstanceParams, depth: int) -> List[RootPrefix]:
    """All prefixes (f_1..f_depth) of zeros f = sum f_i t^i of x^2 - t^2, with their commutation reports."""
    if depth < 1:
        raise InvalidDepth(depth)
    ring, c = _square_shape(params)
    base = ring.base
    if not base.is_finite:
        raise FieldNotFinite(base.name)
    candidates = list(base.elements())

    def satisfied(prefix: Tuple[FieldElement, ...]) -> bool:
        # coefficient of t^(n+1) in f*f, where n = len(prefix)
        k = len(prefix) + 1
        total = base.zero
        for i in range(1, k):
            total = total + prefix[i - 1] * prefix[k - i - 1].sigma(i)
        return total == (base.one if k == 2 else base.zero)

    level: List[Tuple[FieldElement, ...]] = [()]
    for n in range(1, depth + 1):
        level = [p + (e,) for p in level for e in candidates if satisfied(p + (e,))]
        log_verbose(f"root prefixes at depth {n}: {len(level)}")
    const_c = SkewLaurentSeries.constant(c)
    prefixes = []
    for coeffs in level:
        series = SkewLaurentSeries.from_terms(base, {i + 1: e for i, e in enumerate(coeffs)})
        prefixes.append(RootPrefix(coeffs, series, sl_commutes(series, const_c)))
    return prefixes


# -- normal form ----------------------------------------------------------------


@dataclass(frozen=True)
class NormalFormLinear:
    """Coset representative u*x - v."""

    u: Any
    v: Any

    def to_json(self, ring: DivisionRing) -> Dict[str, Any]:
        return {"u": ring.encode(self.u), "v": ring.encode(self.v)}


@dataclass(frozen=True, eq=False)
class Reduction:
    """f = g*(y - c) + p*q + (u*x - v)."""

    g: BiPoly
    h: CentralPoly
    p: CentralPoly
    normal_form: NormalFormLinear


def bipoly_divide_y(f: BiPoly, c: Any) -> Tuple[BiPoly, CentralPoly]:
    """f = g*(y - c) + h with h free of y."""
    g, remainder = f.divide_by_linear(BiPoly.Y, c)
    h = remainder.to_x_poly()
    if g * (BiPoly.y(f.ring) - BiPoly.const(f.ring, c)) + BiPoly.from_x_poly(h) != f:
        raise VerificationError(f"y-division of {f} does not re-expand")
    return g, h


def reduce(f: BiPoly, params: InstanceParams) -> Reduction:
    g, h = bipoly_divide_y(f, params.c)
    p, r = divide_right(h, params.q)
    return Reduction(g, h, p, NormalFormLinear(r.coeff(1), -r.coeff(0)))


def normal_form(f: BiPoly, params: InstanceParams) -> NormalFormLinear:
    return reduce(f, params).normal_form


# -- decision procedure -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Decision:
    member: bool
    normal_form: NormalFormLinear
    witness: Witness
    verified: bool

    @property
    def kind(self) -> WitnessKind:
        return self.witness.kind

    def to_json(self, ring: DivisionRing) -> Dict[str, Any]:
        return {
            "verdict": "member" if self.member else "not_member",
            "normal_form": self.normal_form.to_json(ring),
            "witness_kind": self.kind.value,
            "witness": self.witness.to_json(),
            "verified": self.verified,
        }


def decide_membership(f: BiPoly, params: InstanceParams) -> Decision:
    ring = params.ring
    red = reduce(f, params)
    u, v = red.normal_form.u, red.normal_form.v
    if u.is_zero() and v.is_zero():
        member = MemberWitness(BiPoly.from_x_poly(red.p), red.g)
        if not member.verify(f, params):
            raise WitnessError("membership", str(f))
        return Decision(True, red.normal_form, member, True)

    zero = BiPoly.zero(ring, 2)
    kappa = None
    if u.is_zero():
        # u*x - v = -v, a unit
        kind = WitnessKind.UNIT_REMAINDER
        coeff, b_part, c_part = BiPoly.const(ring, (-v).inverse()), zero, zero
    else:
        u_inv = u.inverse()
        w = u_inv * v
        x_minus_w = BiPoly.from_x_poly(CentralPoly.linear(ring, w))
        if evaluate(params.q, w).is_zero():
            kappa = params.c * w - w * params.c
            if kappa.is_zero():
                raise ConditionViolation(str(w))
            # (y-c)(x-w) - (x-w)(y-c) = cw - wc
            kind = WitnessKind.COMMUTATOR_ROOT
            k_inv = BiPoly.const(ring, kappa.inverse())
            a_part = k_inv * params.y_minus_c
            b_part, c_part = -(k_inv * x_minus_w), zero
        else:
            kind = WitnessKind.EUCLID_COPRIME
            bez = bezout_with_linear(params.q, w)
            assert isinstance(bez, BezoutWitness)
            a_part = BiPoly.from_x_poly(bez.p2)
            b_part, c_part = zero, BiPoly.from_x_poly(bez.p1)
        # x - w = u^{-1}(u*x - v)
        coeff = a_part * BiPoly.const(ring, u_inv)

    # coeff*(u*x - v) + b_part*(y-c) + c_part*q = 1 and u*x - v = f - g*(y-c) - p*q
    unit = UnitWitness(
        c_part - coeff * BiPoly.from_x_poly(red.p),
        b_part - coeff * red.g,
        coeff,
        kind,
        kappa,
    )
    if not unit.verify(f, params):
        raise WitnessError(kind.value, "1")
    return Decision(False, red.normal_form, unit, True)


# -- properness ---------------------------------------------------------------

Vector = Tuple[Any, Any]


@dataclass(frozen=True, eq=False)
class PropernessCertificate:
    """D[x]/D[x]q = D*1 + D*x as a left D[x, y]-module killed by M at 1."""

    check_qc_commute: bool
    module_dimension: int
    x_table: Tuple[Vector, Vector]
    y_table: Tuple[Vector, Vector]
    checks: Tuple[str, ...]

    def to_json(self, ring: DivisionRing) -> Dict[str, Any]:
        def enc(vec: Vector) -> List[Any]:
            return [ring.encode(vec[0]), ring.encode(vec[1])]

        return {
            "check_qc_commute": self.check_qc_commute,
            "module_dimension": self.module_dimension,
            "x_action": [enc(v) for v in self.x_table],
            "y_action": [enc(v) for v in self.y_table],
            "checks": list(self.checks),
        }


def properness_certificate(
    params: InstanceParams, rng: Optional[random.Random] = None, samples: int = 8
) -> PropernessCertificate:
    ring, c = params.ring, params.c
    s, m = params.a + params.b, params.a * params.b
    rng = rng or random.Random(0)
    checks: List[str] = []

    def require(name: str, ok: bool):
        if not ok:
            raise CertificateFailed(name)
        checks.append(name)

    def same(v1: Vector, v2: Vector) -> bool:
        return ring.equal(v1[0], v2[0]) and ring.equal(v1[1], v2[1])

    def act_x(vec: Vector) -> Vector:
        # x*x = (a+b)x - ab modulo q
        alpha, beta = vec
        return (-(beta * m), alpha + beta * s)

    def act_y(vec: Vector) -> Vector:
        return (vec[0] * c, vec[1] * c)

    def scale(d: Any, vec: Vector) -> Vector:
        return (d * vec[0], d * vec[1])

    def act(poly: BiPoly, vec: Vector) -> Vector:
        total: Vector = (ring.zero, ring.zero)
        for (i, j), coeff in poly.terms:
            image = vec
            for _ in range(j):
                image = act_y(image)
            for _ in range(i):
                image = act_x(image)
            image = scale(coeff, image)
            total = (total[0] + image[0], total[1] + image[1])
        return total

    c_poly = CentralPoly.constant(ring, c)
    require("q*c = c*q in D[x]", poly_mul(params.q, c_poly) == poly_mul(c_poly, params.q))
    one_bar: Vector = (ring.one, ring.zero)
    x_bar: Vector = (ring.zero, ring.one)
    for label, basis in (("1", one_bar), ("x", x_bar)):
        require(f"x and y actions commute on {label}", same(act_x(act_y(basis)), act_y(act_x(basis))))
    for _ in range(samples):
        d = ring.random_element(rng)
        vec = (ring.random_element(rng), ring.random_element(rng))
        if not (same(act_x(scale(d, vec)), scale(d, act_x(vec))) and same(act_y(scale(d, vec)), scale(d, act_y(vec)))):
            raise CertificateFailed("actions are left D-linear")
    checks.append(f"actions are left D-linear on {samples} samples")
    zero_vec: Vector = (ring.zero, ring.zero)
    require("q annihilates 1", same(act(params.q_bi, one_bar), zero_vec))
    require("y - c annihilates 1", same(act(params.y_minus_c, one_bar), zero_vec))
    require("1 is nonzero in the quotient", not one_bar[0].is_zero())
    return PropernessCertificate(
        True,
        2,
        (act_x(one_bar), act_x(x_bar)),
        (act_y(one_bar), act_y(x_bar)),
        tuple(checks),
    )


# -- contraction ----------------------------------------------------------------


@dataclass(frozen=True)
class ContractionReport:
    factorization_holds: bool
    q_member: bool
    x_minus_b_member: bool
    x_minus_b_divisible_by_q: bool
    one_member: bool
    a_is_zero: bool
    x_minus_a_member: Optional[bool]
    samples: int
    divisible_samples: int

    @property
    def strict_chain(self) -> bool:
        return (
            self.factorization_holds
            and self.q_member
            and not self.x_minus_b_member
            and not self.x_minus_b_divisible_by_q
            and not self.one_member
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "q_equals_(x-a)(x-b)": self.factorization_holds,
            "q_in_M": self.q_member,
            "x-b_in_M": self.x_minus_b_member,
            "x-b_in_D[x]q": self.x_minus_b_divisible_by_q,
            "1_in_M": self.one_member,
            "x-a_in_M": self.x_minus_a_member,
            "generator": "q" if self.strict_chain else "unknown",
            "strict_chain": self.strict_chain,
            "samples": self.samples,
            "divisible_samples": self.divisible_samples,
        }


def contraction_analysis(params: InstanceParams, rng: Optional[random.Random] = None, samples: int = 50) -> ContractionReport:
    """Check D[x]q ⊊ D[x](x-b) ⊊ D[x] and h ∈ M ⟺ q right-divides h on samples."""
    ring, q = params.ring, params.q
    rng = rng or random.Random(0)
    x_minus_a, x_minus_b = CentralPoly.linear(ring, params.a), CentralPoly.linear(ring, params.b)

    def member(h: CentralPoly) -> bool:
        return decide_membership(BiPoly.from_x_poly(h), params).member

    factorization = poly_mul(x_minus_a, x_minus_b) == q
    _, r_b = divide_right(x_minus_b, q)
    # a is itself a zero of q only in special cases; then x - a is another linear right factor
    a_is_zero = evaluate(q, params.a).is_zero()
    divisible = 0
    for index in range(samples):
        h = CentralPoly.random(ring, rng, 3)
        if index % 2 == 0:
            h = poly_mul(h, q)
        _, r = divide_right(h, q)
        by_division = r.is_zero()
        if member(h) != by_division:
            raise VerificationError(f"membership and q-divisibility disagree on {h}")
        divisible += by_division
    return ContractionReport(
        factorization,
        member(q),
        member(x_minus_b),
        r_b.is_zero(),
        member(CentralPoly.constant(ring, ring.one)),
        a_is_zero,
        member(x_minus_a) if a_is_zero else None,
        samples,
        divisible,
    )


# -- orchestration ------------------------------------------------------------


@dataclass
class StageResult:
    name: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        data = {"status": "pass" if self.passed else "fail", **self.detail}
        if self.error:
            data["error"] = self.error
        return data


@dataclass
class VerificationReport:
    instance: str
    params: Dict[str, Any]
    stages: Dict[str, StageResult]
    trials: List[Dict[str, Any]]

    @property
    def passed(self) -> bool:
        return all(stage.passed for stage in self.stages.values())

    @property
    def first_failure(self) -> Optional[str]:
        return next((name for name, stage in self.stages.items() if not stage.passed), None)

    def to_json(self) -> Dict[str, Any]:
        return {
            "instance": self.instance,
            "params": self.params,
            "conditions": self.stages["conditions"].to_json(),
            "condition_c": self.stages["condition_c"].to_json(),
            "properness": self.stages["properness"].to_json(),
            "maximality": self.stages["maximality"].to_json(),
            "maximality_trials": self.trials,
            "contraction": self.stages["contraction"].to_json(),
            "annotations": ANNOTATIONS,
            "first_failure": self.first_failure,
            "overall": "pass" if self.passed else "fail",
        }


def random_trial_input(params: InstanceParams, rng: random.Random) -> BiPoly:
    """A random element of D[x, y]; every third draw is built inside M."""
    ring = params.ring
    if rng.random() < 1 / 3:
        g1 = BiPoly.random(ring, 2, rng, max_degree=1, max_terms=2)
        g2 = BiPoly.random(ring, 2, rng, max_degree=1, max_terms=2)
        return g1 * params.q_bi + g2 * params.y_minus_c
    return BiPoly.random(ring, 2, rng, max_degree=2, max_terms=3)


def _run_stage(name: str, stages: Dict[str, StageResult], fn) -> Any:
    try:
        passed, detail, value = fn()
        stages[name] = StageResult(name, passed, detail)
        return value
    except CLIError as e:
        log_verbose(f"stage {name} failed: {e.message}")
        stages[name] = StageResult(name, False, {}, e.message)
        return None


def run_counterexample(
    params: InstanceParams,
    policy: Optional[PrecisionPolicy] = None,
    trials: int = 1000,
    enum_depth: int = 4,
    seed: int = 0,
) -> VerificationReport:
    ring = params.ring
    stages: Dict[str, StageResult] = {}

    def conditions():
        report = check_conditions_ab(params)
        return report.holds, {"a": report.a.to_json(ring), "b": report.b.to_json(ring)}, report

    def condition_c():
        structural = condition_c_structural(params, derive_rng(seed, "structural"))
        detail: Dict[str, Any] = {"structural": structural.to_json()}
        passed = structural.passed
        if isinstance(ring, SkewLaurentField) and ring.base.is_finite:
            prefixes = condition_c_enumerative(params, enum_depth)
            at_one = all(not p.commutation.equal and p.commutation.exponent == 1 for p in prefixes)
            detail["enumerative"] = {
                "depth": enum_depth,
                "prefixes": [p.to_json() for p in prefixes],
                "level_one": sorted({str(p.coeffs[0]) for p in prefixes}),
                "all_differ_at_exponent_1": at_one,
            }
            passed = passed and bool(prefixes) and at_one
        return passed, detail, structural

    def properness():
        cert = properness_certificate(params, derive_rng(seed, "properness"))
        return True, cert.to_json(ring), cert

    trial_records: List[Dict[str, Any]] = []

    def maximality():
        counts: Dict[str, int] = {}
        with create_progress(f"Deciding {trials} random elements", total=trials) as progress:
            task = progress.add_task("maximality", total=trials)
            for index in range(trials):
                rng = derive_rng(seed, "trial", index)
                f = random_trial_input(params, rng)
                decision = decide_membership(f, params)
                counts[decision.kind.value] = counts.get(decision.kind.value, 0) + 1
                trial_records.append({"index": index, "input": f.to_json(), **decision.to_json(ring)})
                progress.update(task, advance=1)
        return all(r["verified"] for r in trial_records), {"trials": trials, "witness_kinds": counts}, None

    def contraction():
        report = contraction_analysis(params, derive_rng(seed, "contraction"))
        return report.strict_chain, report.to_json(), report

    _run_stage("conditions", stages, conditions)
    _run_stage("condition_c", stages, condition_c)
    _run_stage("properness", stages, properness)
    _run_stage("maximality", stages, maximality)
    _run_stage("contraction", stages, contraction)
    return VerificationReport(params.name, params.to_json(), stages, trial_records)
