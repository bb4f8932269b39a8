"""Gradient structure of the symmetric part: du/dt = S u = -grad Phi(u)."""

import numpy as np

from ..config import config
from ..errors import NotSymmetricError


def _require_symmetric(S: np.ndarray) -> None:
    residual = float(np.max(np.abs(S - S.T))) if S.size else 0.0
    scale = float(np.max(np.abs(S))) if S.size else 0.0
    if residual > config.structure_tol * max(scale, 1.0):
        raise NotSymmetricError(residual)


def potential(S: np.ndarray, u) -> float:
    """Phi(u) = -u^T S u / 2, nonnegative because -S is positive semidefinite."""
    _require_symmetric(S)
    u = np.asarray(u, dtype=float)
    return float(-0.5 * u @ S @ u)


def potential_gradient(S: np.ndarray, u) -> np.ndarray:
    """grad Phi(u) = -S u."""
    _require_symmetric(S)
    return -S @ np.asarray(u, dtype=float)
