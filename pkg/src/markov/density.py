"""Markov density matrices rho(t) = exp(Qt) rho(0)."""

import numpy as np
from scipy.linalg import expm

from ..errors import NegativeTimeError
from ..models.generator import GeneratorMatrix, MarkovDensityMatrix, ProbabilityVector


def density_matrix_init(p0: ProbabilityVector) -> MarkovDensityMatrix:
    """rho = p0 1^T: every column equals p0, trace one, idempotent."""
    return MarkovDensityMatrix(rho=np.outer(p0.values, np.ones(p0.n)), rank_one=True)


def identity_density(n: int) -> MarkovDensityMatrix:
    """rho(0) = I, whose propagation is the transition probability matrix."""
    return MarkovDensityMatrix(rho=np.eye(n), rank_one=False)


def density_matrix_propagate(
    Q: GeneratorMatrix, rho0: MarkovDensityMatrix, t: float
) -> MarkovDensityMatrix:
    """Evolve under the forward equation d rho/dt = Q rho."""
    if t < 0:
        raise NegativeTimeError(t)
    return MarkovDensityMatrix(rho=expm(Q.rates * t) @ rho0.rho, rank_one=rho0.rank_one)
