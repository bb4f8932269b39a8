"""Entropy production rate and the flux trace identity."""

import logging
from typing import List, Tuple

import numpy as np

from ..config import config
from ..errors import IdentityViolationError, InfiniteEntropyProductionError
from ..models.entropy_report import EdgeFlux, EntropyReport
from ..models.generator import GeneratorMatrix, StationaryDistribution
from ..models.spectrum import SkewSpectrum

logger = logging.getLogger(__name__)


def _positive_pattern(Q: GeneratorMatrix) -> np.ndarray:
    """Boolean off-diagonal pattern of rates above the scale-invariant zero threshold."""
    positive = Q.rates > config.rate_zero_threshold * Q.max_rate
    np.fill_diagonal(positive, False)
    return positive


def _require_weakly_reversible(positive: np.ndarray) -> None:
    one_way = positive & ~positive.T
    if np.any(one_way):
        i, j = (int(k) for k in np.argwhere(one_way)[0])
        raise InfiniteEntropyProductionError(i, j)


def edge_fluxes(Q: GeneratorMatrix, pi: StationaryDistribution) -> List[EdgeFlux]:
    """Flux and affinity of every edge i > j carrying a rate in either direction."""
    positive = _positive_pattern(Q)
    _require_weakly_reversible(positive)
    p = pi.pi
    edges = []
    for i in range(Q.n):
        for j in range(i):
            if not positive[i, j]:
                continue
            forward = Q.rates[i, j] * p[j]
            backward = Q.rates[j, i] * p[i]
            edges.append(
                EdgeFlux(
                    i=i,
                    j=j,
                    flux=float(forward - backward),
                    affinity=float(np.log(forward / backward)),
                )
            )
    return edges


def entropy_production(Q: GeneratorMatrix, pi: StationaryDistribution) -> Tuple[float, List[EdgeFlux]]:
    """e_p = sum_{i>j} J_ij ln(q_ij pi_j / (q_ji pi_i)) in nats per unit time.

    Each summand is nonnegative because flux and affinity share a sign.
    """
    edges = edge_fluxes(Q, pi)
    return float(sum(e.contribution for e in edges)), edges


def near_equilibrium_ep(Q: GeneratorMatrix, pi: StationaryDistribution) -> float:
    """Quadratic approximation 1/2 sum_{i != j} J_ij^2 / (q_ji pi_i) over pairs with q_ji > 0."""
    positive = _positive_pattern(Q)
    _require_weakly_reversible(positive)
    flow = Q.rates * pi.pi[None, :]
    J = flow - flow.T
    backward = flow.T
    mask = positive.T
    return float(0.5 * np.sum(J[mask] ** 2 / backward[mask]))


def flux_sum_of_squares(Q: GeneratorMatrix, pi: StationaryDistribution) -> float:
    """sum_{i != j} (q_ij pi_j - q_ji pi_i)^2 / (pi_i pi_j), straight from the rates."""
    flow = Q.rates * pi.pi[None, :]
    J = flow - flow.T
    return float(np.sum(J**2 / np.outer(pi.pi, pi.pi)))


def _discrepancy(a: float, b: float, floor: float) -> float:
    """|a - b| relative to the larger magnitude, never below ``floor``."""
    return abs(a - b) / max(abs(a), abs(b), floor)


def trace_identity(
    Q: GeneratorMatrix, pi: StationaryDistribution, spectrum: SkewSpectrum
) -> EntropyReport:
    """Evaluate Tr(A^T A), sum a_ij^2 and 2 sum lambda_j^2 for the flux matrix.

    ``spectrum`` must be the spectrum of the flux matrix of (Q, pi). The three
    values come from independent paths; IdentityViolationError is raised when
    any two disagree beyond ``config.identity_rel_tol``.
    """
    flux_A = spectrum.A
    trace_gram = float(np.trace(flux_A.T @ flux_A))
    sum_a2 = flux_sum_of_squares(Q, pi)
    sum_lambda2 = float(2.0 * np.sum(spectrum.lambdas**2))

    values = (trace_gram, sum_a2, sum_lambda2)
    # values of a detailed-balance chain are pure roundoff
    floor = max(1e-9 * Q.inf_norm**2, np.finfo(float).tiny)
    worst = max(
        _discrepancy(a, b, floor) for k, a in enumerate(values) for b in values[k + 1:]
    )
    if worst > config.identity_rel_tol:
        raise IdentityViolationError(trace_gram, sum_a2, sum_lambda2)

    ep, edges = entropy_production(Q, pi)
    return EntropyReport(
        ep=ep,
        ep_near_eq=near_equilibrium_ep(Q, pi),
        trace_gram=trace_gram,
        sum_a2=sum_a2,
        sum_lambda2=sum_lambda2,
        per_edge=edges,
        max_relative_discrepancy=worst,
    )
