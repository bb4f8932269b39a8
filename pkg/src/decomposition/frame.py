"""The square-root-of-probability frame u = Pi^(-1/2) p."""

import numpy as np

from ..config import config
from ..errors import SmallProbabilityError
from ..models.decomposition import FrameTransform
from ..models.generator import ProbabilityVector, StationaryDistribution


def frame_transform(pi: StationaryDistribution) -> FrameTransform:
    """Build the scaling vectors, refusing pi entries below the guard."""
    if np.any(pi.pi < config.min_probability):
        idx = int(np.argmin(pi.pi))
        raise SmallProbabilityError(idx, float(pi.pi[idx]))
    sqrt_pi = np.sqrt(pi.pi)
    return FrameTransform(pi=pi, sqrt_pi=sqrt_pi, inv_sqrt_pi=1.0 / sqrt_pi)


def to_u(p, ft: FrameTransform) -> np.ndarray:
    """Amplitudes u = Pi^(-1/2) p; accepts a ProbabilityVector or raw array."""
    values = p.values if isinstance(p, ProbabilityVector) else np.asarray(p, dtype=float)
    return values * ft.inv_sqrt_pi


def from_u(u, ft: FrameTransform) -> np.ndarray:
    """Probabilities p = Pi^(1/2) u.

    Returned as a raw array: skew-only flows leave the simplex, so the result
    is wrapped in a ProbabilityVector only by callers that need one.
    """
    return np.asarray(u, dtype=float) * ft.sqrt_pi
