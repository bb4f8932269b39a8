"""Data models for entropy production and the trace identity."""

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass(frozen=True)
class EdgeFlux:
    """Stationary flux across one unordered edge ``i > j``."""

    i: int
    j: int
    flux: float  # q_ij pi_j - q_ji pi_i
    affinity: float  # ln(q_ij pi_j / (q_ji pi_i))

    @property
    def contribution(self) -> float:
        """This edge's share of the entropy production rate."""
        return self.flux * self.affinity


@dataclass
class EntropyReport:
    """Entropy production and the three independent paths to Tr(A^T A).

    All quantities use the flux skew matrix (no factor 1/2). Units: nats per
    unit time for ``ep``/``ep_near_eq``, 1/time^2 for the trace quantities.
    """

    ep: float
    ep_near_eq: float
    trace_gram: float
    sum_a2: float
    sum_lambda2: float
    per_edge: List[EdgeFlux] = field(default_factory=list)
    max_relative_discrepancy: float = 0.0

    @property
    def dynamics_trace(self) -> float:
        """Tr(A^T A) for the dynamics-convention skew part A = flux_A / 2."""
        return self.trace_gram / 4.0

    @property
    def near_eq_ratio(self) -> Optional[float]:
        """Dimensionless ep / ep_near_eq; None at detailed balance."""
        if self.ep_near_eq == 0.0:
            return None
        return self.ep / self.ep_near_eq

    @property
    def max_abs_flux(self) -> float:
        return max((abs(e.flux) for e in self.per_edge), default=0.0)
