"""Skew Laurent series K((t, sigma)) with t-adic precision tracking.

Multiplication follows the twist t*u = sigma(u)*t, so the coefficient of t^k
in f*g is sum over i+j=k of f_i * sigma^i(g_j). A series is either exact
(a finite Laurent polynomial with no unstated terms) or known modulo t^p,
in which case only the coefficients below exponent p are trusted.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from core.errors import ConfigError, DivisionByZero, Inconclusive, ParseError, PrecisionExhausted
from core.fields import BaseField, FieldElement

DEFAULT_WORKING_PRECISION = 16
MIN_WORKING_PRECISION = 4


@dataclass(frozen=True)
class PrecisionPolicy:
    working_precision: int = DEFAULT_WORKING_PRECISION

    def __post_init__(self):
        if self.working_precision < MIN_WORKING_PRECISION:
            raise ConfigError(
                f"working precision must be at least {MIN_WORKING_PRECISION}, got {self.working_precision}",
                f"Pass --precision {MIN_WORKING_PRECISION} or more.",
            )


def _min_precision(*precisions: Optional[int]) -> Optional[int]:
    known = [p for p in precisions if p is not None]
    return min(known) if known else None


@dataclass(frozen=True)
class SkewLaurentSeries:
    field: BaseField
    # None marks the zero series
    valuation: Optional[int]
    coeffs: Tuple[FieldElement, ...]
    # None: exact; otherwise coefficients are trusted for exponents < precision
    precision: Optional[int] = None

    @classmethod
    def build(
        cls,
        field: BaseField,
        start: int,
        coeffs: Sequence[FieldElement],
        precision: Optional[int] = None,
    ) -> "SkewLaurentSeries":
        """Canonicalize a coefficient window starting at exponent ``start``."""
        items = list(coeffs)
        if precision is not None:
            items = items[: max(0, precision - start)]
        lo = 0
        while lo < len(items) and items[lo].is_zero():
            lo += 1
        hi = len(items)
        while hi > lo and items[hi - 1].is_zero():
            hi -= 1
        if lo == hi:
            if precision is not None:
                raise PrecisionExhausted(start, precision)
            return cls(field, None, ())
        return cls(field, start + lo, tuple(items[lo:hi]), precision)

    @classmethod
    def from_terms(
        cls, field: BaseField, terms: Dict[int, FieldElement], precision: Optional[int] = None
    ) -> "SkewLaurentSeries":
        if not terms:
            return cls.build(field, 0 if precision is None else precision - 1, [], precision)
        start, stop = min(terms), max(terms)
        window = [terms.get(k, field.zero) for k in range(start, stop + 1)]
        return cls.build(field, start, window, precision)

    @classmethod
    def zero(cls, field: BaseField) -> "SkewLaurentSeries":
        return cls(field, None, ())

    @classmethod
    def monomial(cls, coeff: FieldElement, exponent: int) -> "SkewLaurentSeries":
        return cls.build(coeff.field, exponent, [coeff])

    @classmethod
    def constant(cls, coeff: FieldElement) -> "SkewLaurentSeries":
        return cls.monomial(coeff, 0)

    @classmethod
    def t(cls, field: BaseField) -> "SkewLaurentSeries":
        return cls.monomial(field.one, 1)

    # -- inspection -------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def is_zero(self) -> bool:
        return self.valuation is None

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    @property
    def top(self) -> Optional[int]:
        """Highest exponent with a stored coefficient."""
        if self.valuation is None:
            return None
        return self.valuation + len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> FieldElement:
        if self.valuation is None:
            return self.field.zero
        return self.coeffs[0]

    def coeff(self, k: int) -> FieldElement:
        """Coefficient of t^k; only meaningful below ``precision``."""
        if self.valuation is None or k < self.valuation or k > self.top:
            return self.field.zero
        return self.coeffs[k - self.valuation]

    def terms(self) -> Iterator[Tuple[int, FieldElement]]:
        if self.valuation is None:
            return
        for offset, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield self.valuation + offset, c

    def is_central(self) -> bool:
        """Exact, supported on exponents divisible by ord(sigma), sigma-fixed coefficients."""
        order = self.field.automorphism.order
        return self.is_exact and all(k % order == 0 and c.sigma(1) == c for k, c in self.terms())

    def is_constant(self) -> bool:
        return self.is_exact and (self.valuation is None or (self.valuation == 0 and len(self.coeffs) == 1))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "SkewLaurentSeries") -> "SkewLaurentSeries":
        precision = _min_precision(self.precision, other.precision)
        terms: Dict[int, FieldElement] = dict(self.terms())
        for k, c in other.terms():
            terms[k] = terms[k] + c if k in terms else c
        if precision is not None:
            terms = {k: c for k, c in terms.items() if k < precision}
        return SkewLaurentSeries.from_terms(self.field, terms, precision)

    def __neg__(self) -> "SkewLaurentSeries":
        return SkewLaurentSeries(self.field, self.valuation, tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other: "SkewLaurentSeries") -> "SkewLaurentSeries":
        return self + (-other)

    def __mul__(self, other: "SkewLaurentSeries") -> "SkewLaurentSeries":
        if self.is_zero() or other.is_zero():
            return SkewLaurentSeries.zero(self.field)
        precision = self._product_precision(other)
        terms: Dict[int, FieldElement] = {}
        for i, fi in self.terms():
            for j, gj in other.terms():
                k = i + j
                if precision is not None and k >= precision:
                    continue
                term = fi * gj.sigma(i)
                terms[k] = terms[k] + term if k in terms else term
        return SkewLaurentSeries.from_terms(self.field, terms, precision)

    def _product_precision(self, other: "SkewLaurentSeries") -> Optional[int]:
        if self.is_exact and other.is_exact:
            return None
        candidates = []
        if other.precision is not None:
            candidates.append(self.valuation + other.precision)
        if self.precision is not None:
            candidates.append(self.precision + other.valuation)
        return min(candidates)

    def inverse(self, policy: Optional[PrecisionPolicy] = None) -> "SkewLaurentSeries":
        if self.is_zero():
            raise DivisionByZero("skew Laurent series")
        m = self.valuation
        lead_inv = self.coeffs[0].inverse()
        if self.is_exact and self.is_monomial():
            return SkewLaurentSeries.monomial(lead_inv.sigma(-m), -m)
        policy = policy or PrecisionPolicy()
        precision = policy.working_precision
        if self.precision is not None:
            precision = min(precision, self.precision - 2 * m)
        if precision <= -m:
            raise PrecisionExhausted(-m, precision)
        zero, one = self.field.zero, self.field.one
        inv: Dict[int, FieldElement] = {}
        for n in range(precision + m):
            acc = one if n == 0 else zero
            for i in range(1, n + 1):
                fi = self.coeff(m + i)
                if fi.is_zero():
                    continue
                acc = acc - fi * inv[-m + n - i].sigma(m + i)
            inv[-m + n] = (lead_inv * acc).sigma(-m)
        return SkewLaurentSeries.from_terms(self.field, inv, precision)

    def truncate(self, precision: int) -> "SkewLaurentSeries":
        precision = _min_precision(self.precision, precision)
        return SkewLaurentSeries.from_terms(self.field, {k: c for k, c in self.terms() if k < precision}, precision)

    def shift(self, exponent: int) -> "SkewLaurentSeries":
        """Multiply by t^exponent on the right."""
        return self * SkewLaurentSeries.monomial(self.field.one, exponent)

    # -- codec ------------------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        return {
            "val": self.valuation,
            "coeffs": [self.field.encode(c) for c in self.coeffs],
            "precision": "exact" if self.precision is None else self.precision,
        }

    @classmethod
    def from_json(cls, field: BaseField, raw: Any) -> "SkewLaurentSeries":
        if not isinstance(raw, dict):
            return cls.constant(field.parse(raw))
        try:
            coeffs = [field.parse(c) for c in raw.get("coeffs", [])]
            precision = raw.get("precision", "exact")
            precision = None if precision == "exact" else int(precision)
            start = raw.get("val")
            start = 0 if start is None else int(start)
        except (TypeError, ValueError) as e:
            raise ParseError("skew Laurent series", str(e))
        return cls.build(field, start, coeffs, precision)

    def __str__(self):
        parts: List[str] = []
        for k, c in self.terms():
            if k == 0:
                parts.append(str(c))
                continue
            power = "t" if k == 1 else f"t^{k}"
            parts.append(power if c == self.field.one else f"({c})*{power}")
        if self.precision is not None:
            parts.append(f"O(t^{self.precision})")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CommutationReport:
    equal: bool
    exponent: Optional[int] = None
    lhs: Optional[FieldElement] = None
    rhs: Optional[FieldElement] = None

    def to_json(self) -> Dict[str, Any]:
        if self.equal:
            return {"verdict": "equal"}
        return {"verdict": "differs", "exponent": self.exponent, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def sl_mul(f: SkewLaurentSeries, g: SkewLaurentSeries) -> SkewLaurentSeries:
    return f * g


def sl_add(f: SkewLaurentSeries, g: SkewLaurentSeries) -> SkewLaurentSeries:
    return f + g


def sl_neg(f: SkewLaurentSeries) -> SkewLaurentSeries:
    return -f


def sl_inverse(f: SkewLaurentSeries, policy: Optional[PrecisionPolicy] = None) -> SkewLaurentSeries:
    return f.inverse(policy)


def sl_conjugate(
    a: SkewLaurentSeries, b: SkewLaurentSeries, policy: Optional[PrecisionPolicy] = None
) -> SkewLaurentSeries:
    """Return b a b^{-1}."""
    return b * a * b.inverse(policy)


def sl_commutes(f: SkewLaurentSeries, g: SkewLaurentSeries) -> CommutationReport:
    """Compare f*g with g*f coefficient by coefficient up to their joint precision."""
    fg, gf = f * g, g * f
    precision = _min_precision(fg.precision, gf.precision)
    exponents = sorted({k for k, _ in fg.terms()} | {k for k, _ in gf.terms()})
    for k in exponents:
        if precision is not None and k >= precision:
            break
        lhs, rhs = fg.coeff(k), gf.coeff(k)
        if lhs != rhs:
            return CommutationReport(False, k, lhs, rhs)
    if precision is not None:
        raise Inconclusive("f*g and g*f", precision)
    return CommutationReport(True)
