"""Master-equation propagation dp/dt = Q p."""

import logging
import math
from typing import Optional

import numpy as np
from scipy.linalg import expm

from ..config import config
from ..errors import InvalidProbabilityError, NegativeTimeError, StepTooLargeError
from ..models.generator import GeneratorMatrix, ProbabilityVector

logger = logging.getLogger(__name__)

# |R(z)| may exceed one by this much on the zero eigenvalue through roundoff
STABILITY_SLACK = 1e-9


def rk4_step_matrix(G: np.ndarray, h: float) -> np.ndarray:
    """One classical Runge-Kutta step for the linear system dx/dt = G x.

    For linear right-hand sides the four stages collapse to the degree-4
    Taylor polynomial of exp(hG).
    """
    n = G.shape[0]
    hG = h * G
    hG2 = hG @ hG
    hG3 = hG2 @ hG
    return np.eye(n, dtype=G.dtype) + hG + hG2 / 2.0 + hG3 / 6.0 + (hG3 @ hG) / 24.0


def rk4_amplification(G: np.ndarray, h: float) -> float:
    """max |R(h mu)| over the eigenvalues mu of G, R the RK4 stability polynomial."""
    z = h * np.linalg.eigvals(G)
    R = 1.0 + z + z**2 / 2.0 + z**3 / 6.0 + z**4 / 24.0
    return float(np.max(np.abs(R))) if R.size else 1.0


def step_count(t: float, h: float) -> int:
    """Number of equal steps of size at most ``h`` covering ``[0, t]``."""
    return max(1, math.ceil(t / h - 1e-9))


def clamp_probabilities(values: np.ndarray, tol: Optional[float] = None) -> np.ndarray:
    """Clamp roundoff negatives (down to ``-tol``) to zero and renormalize."""
    tol = config.clamp_tol if tol is None else tol
    lowest = float(values.min())
    if lowest < -tol:
        raise InvalidProbabilityError(f"Propagated probability {lowest:.3e} is below -{tol:.1e}")
    if lowest < 0:
        logger.debug("Clamping propagated probability %.3e to zero", lowest)
    clamped = np.clip(values, 0.0, None)
    return clamped / clamped.sum()


def _rk4(Q: GeneratorMatrix, p0: ProbabilityVector, t: float, h: float) -> np.ndarray:
    if h <= 0:
        raise StepTooLargeError(h, float("nan"))
    n_steps = step_count(t, h)
    dt = t / n_steps
    amplification = rk4_amplification(Q.rates, dt)
    if amplification > 1.0 + STABILITY_SLACK:
        raise StepTooLargeError(
            h, float("nan"), detail=f"stability polynomial reaches |R| = {amplification:.3e}"
        )

    step = rk4_step_matrix(Q.rates, dt)
    values = p0.values.copy()
    limit = config.blowup_factor
    for _ in range(n_steps):
        values = step @ values
        norm = float(np.abs(values).sum())
        if not math.isfinite(norm) or norm > limit:
            raise StepTooLargeError(h, norm)

    lowest = float(values.min())
    if lowest < -config.clamp_tol:
        raise StepTooLargeError(
            h, float(np.abs(values).sum()), detail=f"probability {lowest:.3e} went negative"
        )
    return values


def propagate(
    Q: GeneratorMatrix,
    p0: ProbabilityVector,
    t: float,
    method: str = "expm",
    h: Optional[float] = None,
) -> ProbabilityVector:
    """Return p(t) = exp(Qt) p0.

    ``method="expm"`` uses scaling-and-squaring Padé; ``method="rk4"`` takes
    fixed steps of size at most ``h``. An rk4 step outside the stability
    region, a norm blowup or a negative probability raises StepTooLargeError.
    """
    if t < 0:
        raise NegativeTimeError(t)
    if t == 0:
        return p0

    if method == "expm":
        values = expm(Q.rates * t) @ p0.values
    elif method == "rk4":
        values = _rk4(Q, p0, t, config.default_step if h is None else h)
    else:
        raise ValueError(f"Unknown propagation method: {method!r}")

    return ProbabilityVector(values=clamp_probabilities(values))
