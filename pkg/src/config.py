"""Configuration management for skewmarkov."""

import os
from dataclasses import dataclass, field, fields
from typing import List
from dotenv import load_dotenv

load_dotenv()

ENV_PREFIX = "SKEWMARKOV_"


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(f"{ENV_PREFIX}{name}", str(default)))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(f"{ENV_PREFIX}{name}", str(default)))


@dataclass
class Config:
    """Application configuration.

    Every tolerance can be overridden with ``SKEWMARKOV_<FIELD_NAME_UPPER>``.
    """

    # Generator validation
    column_sum_tol: float = field(default_factory=lambda: _env_float("COLUMN_SUM_TOL", 1e-10))
    rate_zero_threshold: float = field(
        default_factory=lambda: _env_float("RATE_ZERO_THRESHOLD", 1e-14)
    )

    # Stationary distribution
    stationary_residual_tol: float = field(
        default_factory=lambda: _env_float("STATIONARY_RESIDUAL_TOL", 1e-10)
    )
    singular_gap_tol: float = field(default_factory=lambda: _env_float("SINGULAR_GAP_TOL", 1e-9))

    # Propagation
    clamp_tol: float = field(default_factory=lambda: _env_float("CLAMP_TOL", 1e-12))
    probability_sum_tol: float = field(
        default_factory=lambda: _env_float("PROBABILITY_SUM_TOL", 1e-8)
    )
    blowup_factor: float = field(default_factory=lambda: _env_float("BLOWUP_FACTOR", 1e6))
    default_step: float = field(default_factory=lambda: _env_float("DEFAULT_STEP", 1e-3))

    # Decomposition
    min_probability: float = field(default_factory=lambda: _env_float("MIN_PROBABILITY", 1e-12))
    structure_tol: float = field(default_factory=lambda: _env_float("STRUCTURE_TOL", 1e-10))
    reversible_rel_tol: float = field(
        default_factory=lambda: _env_float("REVERSIBLE_REL_TOL", 1e-11)
    )
    psd_tol: float = field(default_factory=lambda: _env_float("PSD_TOL", 1e-9))

    # Skew spectral machinery
    skew_tol: float = field(default_factory=lambda: _env_float("SKEW_TOL", 1e-10))
    spectrum_drift_tol: float = field(
        default_factory=lambda: _env_float("SPECTRUM_DRIFT_TOL", 1e-8)
    )
    zero_eigenvalue_rel: float = field(
        default_factory=lambda: _env_float("ZERO_EIGENVALUE_REL", 1e-9)
    )
    zero_eigenvalue_abs: float = field(
        default_factory=lambda: _env_float("ZERO_EIGENVALUE_ABS", 1e-12)
    )
    degeneracy_rel: float = field(default_factory=lambda: _env_float("DEGENERACY_REL", 1e-6))
    canonical_tol: float = field(default_factory=lambda: _env_float("CANONICAL_TOL", 1e-9))
    pairing_tol: float = field(default_factory=lambda: _env_float("PAIRING_TOL", 1e-8))

    # Dynamics
    commutator_tol: float = field(default_factory=lambda: _env_float("COMMUTATOR_TOL", 1e-10))

    # Entropy
    identity_rel_tol: float = field(default_factory=lambda: _env_float("IDENTITY_REL_TOL", 1e-9))

    # Output and CLI defaults
    default_convention: str = field(
        default_factory=lambda: os.getenv(f"{ENV_PREFIX}DEFAULT_CONVENTION", "column")
    )
    float_digits: int = field(default_factory=lambda: _env_int("FLOAT_DIGITS", 17))
    verify_workers: int = field(default_factory=lambda: _env_int("VERIFY_WORKERS", 1))

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, float) and not value > 0:
                errors.append(f"{ENV_PREFIX}{f.name.upper()} must be positive, got {value}")
        if self.default_convention not in ("column", "row"):
            errors.append(
                f"{ENV_PREFIX}DEFAULT_CONVENTION must be 'column' or 'row', "
                f"got {self.default_convention!r}"
            )
        if not 1 <= self.float_digits <= 17:
            errors.append(f"{ENV_PREFIX}FLOAT_DIGITS must be in [1, 17], got {self.float_digits}")
        if self.verify_workers < 1:
            errors.append(f"{ENV_PREFIX}VERIFY_WORKERS must be >= 1, got {self.verify_workers}")
        return errors


# Global config instance
config = Config()
