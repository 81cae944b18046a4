"""Shipped and user-supplied parameter sets for the counterexample."""

from typing import Any, Callable, Dict, Optional

from core.codec import load_document
from core.counterexample import InstanceParams
from core.errors import ConfigError, ParseError
from core.fields import GAUSSIAN, GF4, get_field
from core.laurent import PrecisionPolicy
from core.skewfield import SkewLaurentField


def gf4_instance(policy: Optional[PrecisionPolicy] = None) -> InstanceParams:
    """a = b = t (so a = -t in characteristic 2), c = w."""
    ring = SkewLaurentField(GF4, policy)
    return InstanceParams("gf4", ring, ring.t, ring.t, ring.constant(GF4.w))


def gaussian_instance(policy: Optional[PrecisionPolicy] = None) -> InstanceParams:
    """a = -t, b = t, c = i over Q(i) with complex conjugation."""
    ring = SkewLaurentField(GAUSSIAN, policy)
    return InstanceParams("gaussian", ring, -ring.t, ring.t, ring.constant(GAUSSIAN.i))


SHIPPED: Dict[str, Callable[[Optional[PrecisionPolicy]], InstanceParams]] = {
    "gf4": gf4_instance,
    "gaussian": gaussian_instance,
}


def instance_from_document(raw: Any, policy: Optional[PrecisionPolicy] = None, name: str = "custom") -> InstanceParams:
    """{"field": "gf4"|"gaussian", "a": series, "b": series, "c": series}."""
    if not isinstance(raw, dict):
        raise ParseError("instance", "expected a mapping with field, a, b, c")
    missing = [key for key in ("field", "a", "b", "c") if key not in raw]
    if missing:
        raise ParseError("instance", f"missing keys: {', '.join(missing)}")
    ring = SkewLaurentField(get_field(str(raw["field"])), policy)
    a, b, c = (ring.parse(raw[key]) for key in ("a", "b", "c"))
    return InstanceParams(name, ring, a, b, c)


def load_instance(name: str, params_path: Optional[str] = None, policy: Optional[PrecisionPolicy] = None) -> InstanceParams:
    if name == "custom":
        if not params_path:
            raise ConfigError("--instance custom needs a parameter file", "Pass --params FILE (JSON or YAML).")
        return instance_from_document(load_document(params_path), policy)
    if name not in SHIPPED:
        raise ConfigError(f"Unknown instance {name!r}", f"Use one of: {', '.join([*SHIPPED, 'custom'])}.")
    return SHIPPED[name](policy)


def instance_document(params: InstanceParams) -> Dict[str, Any]:
    """Inverse of instance_from_document for series-field instances."""
    ring = params.ring
    assert isinstance(ring, SkewLaurentField)
    return {
        "field": ring.base.name,
        "a": ring.encode(params.a),
        "b": ring.encode(params.b),
        "c": ring.encode(params.c),
    }
