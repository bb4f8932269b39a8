"""Symmetric/skew-symmetric split of a generator in the p- and u-frames."""

from typing import Tuple

import numpy as np

from ..config import config
from ..errors import ToleranceViolationError
from ..markov.generator import validate_generator
from ..models.decomposition import Decomposition
from ..models.generator import GeneratorMatrix, StationaryDistribution
from ..spectral.skew import inf_norm
from .frame import frame_transform


def _check_stationary(Q: GeneratorMatrix, pi: StationaryDistribution) -> None:
    residual = float(np.max(np.abs(Q.rates @ pi.pi)))
    tolerance = config.stationary_residual_tol * max(Q.inf_norm, 1.0)
    if residual > tolerance:
        raise ToleranceViolationError(residual, tolerance)


def reversal_matrix(Q: GeneratorMatrix, pi: StationaryDistribution) -> np.ndarray:
    """Pi Q^T Pi^(-1), the generator of the time-reversed chain."""
    return pi.pi[:, None] * Q.rates.T / pi.pi[None, :]


def time_reversal(Q: GeneratorMatrix, pi: StationaryDistribution) -> GeneratorMatrix:
    """The time-reversed chain as a validated generator with the same pi."""
    _check_stationary(Q, pi)
    return validate_generator(reversal_matrix(Q, pi), labels=Q.labels)


def forward_split(
    Q: GeneratorMatrix, pi: StationaryDistribution
) -> Tuple[np.ndarray, np.ndarray]:
    """QS = (Q + Pi Q^T Pi^-1)/2 and QA = Q - QS.

    QS is itself a reversible generator with stationary distribution pi;
    QA generally has negative off-diagonal entries.
    """
    _check_stationary(Q, pi)
    QS = 0.5 * (Q.rates + reversal_matrix(Q, pi))
    QA = Q.rates - QS
    return QS, QA


def antisymmetric_part(M: np.ndarray) -> np.ndarray:
    """M - M^T, or exactly zero when it is at the roundoff level of M.

    The cutoff is ``config.reversible_rel_tol`` relative to ``||M||_inf``, so a
    detailed-balance chain has a zero skew part at every rate scale.
    """
    diff = M - M.T
    if np.max(np.abs(diff)) <= config.reversible_rel_tol * inf_norm(M):
        return np.zeros_like(M)
    return diff


def flux_matrix(Q: GeneratorMatrix, pi: StationaryDistribution) -> np.ndarray:
    """a_ij = (q_ij pi_j - q_ji pi_i) / sqrt(pi_i pi_j), straight from the rates."""
    flow = Q.rates * pi.pi[None, :]
    return (flow - flow.T) / np.sqrt(np.outer(pi.pi, pi.pi))


def u_frame(Q: GeneratorMatrix, pi: StationaryDistribution) -> Decomposition:
    """Split M = Pi^(-1/2) Q Pi^(1/2) into S = (M + M^T)/2 and A = (M - M^T)/2."""
    QS, QA = forward_split(Q, pi)
    ft = frame_transform(pi)
    M = ft.conjugate(Q.rates)
    S = 0.5 * (M + M.T)
    A = 0.5 * antisymmetric_part(M)
    return Decomposition(S=S, A=A, flux_A=2.0 * A, QS=QS, QA=QA, frame=ft)
