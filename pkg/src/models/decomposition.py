"""Data models for the symmetric/skew-symmetric generator split."""

from dataclasses import dataclass

import numpy as np

from .generator import StationaryDistribution, _frozen


@dataclass(frozen=True)
class FrameTransform:
    """Square-root scaling between probabilities p and amplitudes u = Pi^(-1/2) p."""

    pi: StationaryDistribution
    sqrt_pi: np.ndarray
    inv_sqrt_pi: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "sqrt_pi", _frozen(self.sqrt_pi))
        object.__setattr__(self, "inv_sqrt_pi", _frozen(self.inv_sqrt_pi))

    @property
    def n(self) -> int:
        return self.sqrt_pi.shape[0]

    def conjugate(self, matrix: np.ndarray) -> np.ndarray:
        """Similarity transform Pi^(-1/2) M Pi^(1/2)."""
        return self.inv_sqrt_pi[:, None] * matrix * self.sqrt_pi[None, :]


@dataclass(frozen=True)
class Decomposition:
    """Generator split in both frames.

    ``S`` and ``A`` are the u-frame parts with S + A = Pi^(-1/2) Q Pi^(1/2);
    ``flux_A = 2 A`` is the skew matrix whose entries are the scaled stationary
    fluxes; ``QS`` and ``QA`` are the p-frame parts with QS + QA = Q.
    """

    S: np.ndarray
    A: np.ndarray
    flux_A: np.ndarray
    QS: np.ndarray
    QA: np.ndarray
    frame: FrameTransform

    def __post_init__(self):
        for name in ("S", "A", "flux_A", "QS", "QA"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def n(self) -> int:
        return self.S.shape[0]

    @property
    def generator(self) -> np.ndarray:
        """The full u-frame generator S + A."""
        return self.S + self.A

    @property
    def stationary_amplitude(self) -> np.ndarray:
        """u^s = sqrt(pi), the common kernel vector of S and A."""
        return self.frame.sqrt_pi
