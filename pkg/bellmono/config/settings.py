"""Centralized configuration for the Bell monogamy toolkit."""
from dataclasses import dataclass
from decimal import Context, ROUND_HALF_EVEN
from typing import Optional


@dataclass
class Config:
    """Configuration class with all caps, precisions, and defaults."""

    # Caps
    MAX_PARTIES: int = 12
    MAX_JOINT_SETTINGS: int = 20000
    MAX_JOINT_OUTCOMES: int = 20000
    MAX_TABLE_ENTRIES: int = 400000
    STRATEGY_CAP: int = 10_000_000
    LP_VARIABLE_CAP: int = 5000
    FLATTEN_CAP: int = 4096

    # Precision
    SQRT2_DIGITS: int = 30  # |r^2 - 1/2| <= 1e-24 for r ~ 1/sqrt2
    DECIMAL_DIGITS: int = 12  # significant digits in decimal renderings
    FLOAT_TOLERANCE: float = 1e-9

    # Sampling
    DEFAULT_SEED: int = 0
    DEFAULT_MIX: int = 3
    SAMPLE_RESOLUTION: int = 64  # objective coefficients are k/64, |k| <= 64

    # Enumeration
    ENUMERATION_WORKERS: int = 1
    ENUMERATION_CHUNK: int = 65536

    # Observability
    RUN_LOG_DIR: Optional[str] = None
    DEBUG_MODE: bool = False

    def decimal_context(self) -> Context:
        """Get the decimal context used for rendering exact values."""
        return Context(prec=self.DECIMAL_DIGITS + 30, rounding=ROUND_HALF_EVEN)


# Global config instance
config = Config()
