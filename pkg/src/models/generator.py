"""Data models for Markov generators, probability vectors and density matrices."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..config import config
from ..errors import InvalidProbabilityError, ReducibleError


def _frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only float copy so values can be shared across threads."""
    out = np.array(array, dtype=float, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class GeneratorMatrix:
    """A validated Q-matrix in the column (forward-operator) convention.

    ``rates[i, j]`` is the transition rate from state ``j`` to state ``i``;
    every column sums to zero.
    """

    rates: np.ndarray
    labels: Tuple[str, ...]
    irreducible: bool
    n_components: int = 1

    def __post_init__(self):
        object.__setattr__(self, "rates", _frozen(self.rates))
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return self.rates.shape[0]

    @property
    def max_rate(self) -> float:
        """Largest absolute entry, the scale used by relative tolerances."""
        return float(np.max(np.abs(self.rates))) if self.n else 0.0

    @property
    def inf_norm(self) -> float:
        """Induced infinity norm (max absolute row sum)."""
        return float(np.max(np.sum(np.abs(self.rates), axis=1)))

    def require_irreducible(self) -> "GeneratorMatrix":
        """Raise ReducibleError unless the chain is irreducible."""
        if not self.irreducible:
            raise ReducibleError(self.n_components)
        return self


@dataclass(frozen=True)
class ProbabilityVector:
    """A probability distribution over the chain's states."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))

    @classmethod
    def from_values(cls, values, sum_tol: Optional[float] = None) -> "ProbabilityVector":
        """Validate and normalize raw entries.

        Entries must be finite and nonnegative and must already sum to one
        within ``sum_tol``; the result is renormalized exactly.
        """
        sum_tol = config.probability_sum_tol if sum_tol is None else sum_tol
        arr = np.asarray(values, dtype=float).ravel()
        if arr.size == 0:
            raise InvalidProbabilityError("Probability vector is empty")
        if not np.all(np.isfinite(arr)):
            raise InvalidProbabilityError("Probability vector has non-finite entries")
        if np.any(arr < 0):
            idx = int(np.argmin(arr))
            raise InvalidProbabilityError(f"Negative probability p[{idx}] = {arr[idx]!r}")
        total = float(arr.sum())
        if abs(total - 1.0) > sum_tol:
            raise InvalidProbabilityError(f"Probabilities sum to {total!r}, expected 1")
        return cls(values=arr / total)

    @classmethod
    def uniform(cls, n: int) -> "ProbabilityVector":
        return cls(values=np.full(n, 1.0 / n))

    @classmethod
    def point_mass(cls, n: int, state: int) -> "ProbabilityVector":
        values = np.zeros(n)
        values[state] = 1.0
        return cls(values=values)

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class StationaryDistribution:
    """Strictly positive stationary distribution with its residual ``||Q pi||_inf``."""

    pi: np.ndarray
    residual: float

    def __post_init__(self):
        object.__setattr__(self, "pi", _frozen(self.pi))

    @property
    def n(self) -> int:
        return self.pi.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        """The diagonal matrix Pi = diag(pi)."""
        return np.diag(self.pi)

    def as_probability(self) -> ProbabilityVector:
        return ProbabilityVector(values=self.pi)


@dataclass(frozen=True)
class MarkovDensityMatrix:
    """Markov density matrix; rank one ``p 1^T`` when built from a distribution."""

    rho: np.ndarray
    rank_one: bool = field(default=True)

    def __post_init__(self):
        object.__setattr__(self, "rho", _frozen(self.rho))

    @property
    def n(self) -> int:
        return self.rho.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.rho))

    @property
    def idempotence_residual(self) -> float:
        """``max |rho^2 - rho|``; zero for rank-one density matrices."""
        return float(np.max(np.abs(self.rho @ self.rho - self.rho)))

    @property
    def column_sums(self) -> np.ndarray:
        return self.rho.sum(axis=0)


@dataclass(frozen=True)
class GeneratorSource:
    """A generator matrix as read from disk, before validation."""

    raw: np.ndarray
    labels: Optional[List[str]]
    convention: str
    sha256: str
    path: Optional[str] = None
