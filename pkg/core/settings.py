"""Global settings for CLI."""

import random
from typing import Optional

from core.errors import ConfigError
from core.laurent import DEFAULT_WORKING_PRECISION, MIN_WORKING_PRECISION, PrecisionPolicy

FORMATS = ("text", "json")
MAX_SEED = 2**64 - 1


class Settings:
    def __init__(self):
        self.reset()

    def reset(self):
        """Reset to defaults."""
        self.verbose = False
        self.quiet = False
        self.format = "text"
        self.precision = DEFAULT_WORKING_PRECISION
        self.seed = 0
        self.out: Optional[str] = None

    def validate(self):
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown format {self.format!r}", f"Use one of: {', '.join(FORMATS)}.")
        if self.precision < MIN_WORKING_PRECISION:
            raise ConfigError(f"--precision must be at least {MIN_WORKING_PRECISION}, got {self.precision}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(f"--seed must be a 64-bit unsigned integer, got {self.seed}")

    def policy(self) -> PrecisionPolicy:
        return PrecisionPolicy(self.precision)


def derive_rng(seed: int, *labels: object) -> random.Random:
    """Independent generator per (seed, labels); the same inputs always give the same stream."""
    return random.Random(":".join([str(seed), *(str(label) for label in labels)]))


# Global settings instance
settings = Settings()
