"""Data models for flow trajectories and their conservation diagnostics."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

import numpy as np


class FlowGenerator(str, Enum):
    """Which part of the u-frame generator drives a flow."""

    S = "S"
    A = "A"
    SA = "SA"


class Scheme(str, Enum):
    """Time integration scheme."""

    RK4 = "rk4"
    EXPM = "expm"


@dataclass
class Trajectory:
    """Time-stamped u-frame states with per-sample diagnostics."""

    times: np.ndarray
    states: np.ndarray
    generator: FlowGenerator
    scheme: Scheme
    hamiltonian: np.ndarray
    norm2: np.ndarray
    potential: np.ndarray
    observables: Dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.states = np.asarray(self.states, dtype=float)
        if self.times.ndim != 1 or self.states.shape[0] != self.times.shape[0]:
            raise ValueError("times and states must have matching lengths")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("Trajectory times must be strictly increasing")
        if not np.all(np.isfinite(self.states)):
            raise ValueError("Trajectory states must be finite")

    def __len__(self) -> int:
        return self.times.shape[0]

    @property
    def initial(self) -> np.ndarray:
        return self.states[0]

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]


@dataclass
class ObservableDrift:
    """Conservation result for one user observable P."""

    name: str
    commutator_norm: float
    commutes: bool
    drift: Optional[float] = None


@dataclass
class HarmonicCheck:
    """Diagnostic for d/dt ||u - c 1||^2 = 0, which holds iff A 1 = 0."""

    c: float
    a_one_norm: float
    drift: float
    passed: bool


@dataclass
class ConservationReport:
    """Residual summary of a skew flow."""

    hamiltonian_drift: float
    hamiltonian_relative_drift: float
    norm_drift: float
    norm_relative_drift: float
    observables: List[ObservableDrift] = field(default_factory=list)
    harmonic: Optional[HarmonicCheck] = None

    @property
    def skipped_observables(self) -> List[str]:
        return [o.name for o in self.observables if not o.commutes]
