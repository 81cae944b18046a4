"""Custom error handling for CLI and the algebra engine."""

from typing import Optional


class CLIError(Exception):
    """Custom CLI error with suggestion support."""

    exit_code = 1

    def __init__(self, message: str, suggestion: Optional[str] = None):
        self.message = message
        self.suggestion = suggestion
        super().__init__(self.message)

    def __str__(self):
        result = f"Error: {self.message}"
        if self.suggestion:
            result += f"\nSuggestion: {self.suggestion}"
        return result


class ConfigError(CLIError):
    """Invalid run configuration."""

    exit_code = 2

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(message, suggestion or "Run with --help to see the accepted options.")


class ParseError(CLIError):
    """Malformed element, polynomial or instance input."""

    exit_code = 2

    def __init__(self, what: str, reason: str):
        super().__init__(
            f"Could not parse {what}: {reason}",
            'GF(4) elements are "0", "1", "w", "w+1"; Gaussian rationals are {"re": "p/q", "im": "p/q"}.',
        )


class DivisionByZero(CLIError):
    """Inverse of zero requested."""

    def __init__(self, what: str = "element"):
        super().__init__(f"Cannot invert zero {what}")


class PrecisionExhausted(CLIError):
    """A truncated result carries no trusted nonzero coefficient."""

    def __init__(self, valuation: int, precision: int):
        super().__init__(
            f"Result known only modulo t^{precision} has no coefficient below its precision (valuation {valuation})",
            "Increase --precision.",
        )


class Inconclusive(CLIError):
    """Equality holds up to precision but the inputs are truncated."""

    def __init__(self, what: str, precision: int):
        super().__init__(
            f"{what} agree up to t^{precision} but the inputs are not exact",
            "Increase --precision or use exact inputs.",
        )


class ShapeMismatch(CLIError):
    """Input outside the shape a checker handles."""

    def __init__(self, message: str):
        super().__init__(message)


class FieldNotFinite(CLIError):
    """Exhaustive search requested over an infinite field."""

    def __init__(self, field_name: str):
        super().__init__(
            f"Field {field_name} is not finite; exhaustive root enumeration needs a finite base field",
            "Use the gf4 instance or rely on the structural condition check.",
        )


class InvalidDepth(CLIError):
    """Root enumeration depth outside the accepted range."""

    def __init__(self, depth: int):
        super().__init__(f"Enumeration depth must be at least 1, got {depth}", "Pass --enum-depth 1 or more.")


class NonCommutingPoint(CLIError):
    """Substitution requested at a point whose coordinates do not commute."""

    def __init__(self, i: int, j: int):
        super().__init__(f"Coordinates {i} and {j} do not commute; substitution is not well defined")


class ConditionViolation(CLIError):
    """A zero of the quadratic commutes with c: the instance is not a counterexample."""

    def __init__(self, root: str):
        super().__init__(
            f"Zero {root} of (x-a)(x-b) commutes with c; condition (c) fails for these parameters",
            "Pick c with c^sigma != c.",
        )


class CertificateFailed(CLIError):
    """The properness module construction violated an identity."""

    def __init__(self, identity: str):
        super().__init__(f"Properness certificate failed: {identity}")


class WitnessError(CLIError):
    """A produced witness does not re-expand to its claim."""

    def __init__(self, kind: str, claim: str):
        super().__init__(f"{kind} witness does not expand to {claim}")


class VerificationError(CLIError):
    """A cross-check inside the verification pipeline disagreed."""

    def __init__(self, message: str):
        super().__init__(message)
