"""Stationary distribution of an irreducible generator."""

import numpy as np

from ..config import config
from ..errors import SingularBeyondToleranceError
from ..models.generator import GeneratorMatrix, StationaryDistribution


def stationary_distribution(Q: GeneratorMatrix) -> StationaryDistribution:
    """Solve Q pi = 0 with 1^T pi = 1 appended, in the least-squares sense.

    The rank-(n-1) structure is checked first: if the second-smallest
    singular value of Q falls below ``singular_gap_tol`` times the largest,
    the null space is numerically more than one-dimensional.
    """
    Q.require_irreducible()
    rates = Q.rates
    n = Q.n
    if n == 1:
        return StationaryDistribution(pi=np.ones(1), residual=0.0)

    singular_values = np.linalg.svd(rates, compute_uv=False)
    if singular_values[-2] < config.singular_gap_tol * singular_values[0]:
        raise SingularBeyondToleranceError(
            f"Second-smallest singular value {singular_values[-2]!r} is below "
            f"{config.singular_gap_tol!r} x {singular_values[0]!r}; null space is not one-dimensional"
        )

    # rows of Q on the same footing as the normalization row
    system = np.vstack([rates / Q.inf_norm, np.ones((1, n))])
    rhs = np.zeros(n + 1)
    rhs[-1] = 1.0
    pi, *_ = np.linalg.lstsq(system, rhs, rcond=None)

    if np.any(pi <= 0):
        idx = int(np.argmin(pi))
        raise SingularBeyondToleranceError(
            f"Stationary solve produced nonpositive pi[{idx}] = {pi[idx]!r}"
        )
    pi = pi / pi.sum()

    residual = float(np.max(np.abs(rates @ pi)))
    if residual > config.stationary_residual_tol * Q.inf_norm:
        raise SingularBeyondToleranceError(
            f"Stationary residual {residual!r} exceeds {config.stationary_residual_tol!r} x ||Q||"
        )
    return StationaryDistribution(pi=pi, residual=residual)
