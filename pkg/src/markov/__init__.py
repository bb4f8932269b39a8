"""Markov generator core: validation, stationarity, propagation, density matrices."""

from .generator import (
    ChainKind,
    Convention,
    count_components,
    perturbed_chain,
    random_chain,
    validate_generator,
)
from .stationary import stationary_distribution
from .propagation import (
    clamp_probabilities,
    propagate,
    rk4_amplification,
    rk4_step_matrix,
    step_count,
)
from .density import density_matrix_init, density_matrix_propagate, identity_density

__all__ = [
    "ChainKind",
    "Convention",
    "count_components",
    "perturbed_chain",
    "random_chain",
    "validate_generator",
    "stationary_distribution",
    "clamp_probabilities",
    "propagate",
    "rk4_amplification",
    "rk4_step_matrix",
    "step_count",
    "density_matrix_init",
    "density_matrix_propagate",
    "identity_density",
]
