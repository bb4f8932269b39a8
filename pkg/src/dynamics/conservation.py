"""Conservation diagnostics for skew flows."""

import logging
from typing import Dict, Optional

import numpy as np

from ..config import config
from ..errors import NotSkewFlowError
from ..models.trajectory import (
    ConservationReport,
    FlowGenerator,
    HarmonicCheck,
    ObservableDrift,
    Trajectory,
)
from ..spectral.skew import inf_norm, require_skew

logger = logging.getLogger(__name__)


def _drift(values: np.ndarray) -> float:
    return float(np.max(np.abs(values - values[0])))


def _relative(drift: float, reference: float) -> float:
    return drift / reference if reference > 0 else drift


def commutator_norm(A: np.ndarray, P: np.ndarray) -> float:
    """max |A P - P A|."""
    return float(np.max(np.abs(A @ P - P @ A)))


def commutes(A: np.ndarray, P: np.ndarray) -> bool:
    scale = max(1.0, inf_norm(A) * inf_norm(P))
    return commutator_norm(A, P) <= config.commutator_tol * scale


def harmonic_check(traj: Trajectory, A: np.ndarray, c: float = 1.0) -> HarmonicCheck:
    """Drift of ||u - c 1||^2; the quantity is conserved iff A 1 = 0."""
    A = require_skew(A)
    ones = np.ones(A.shape[0])
    a_one = float(np.max(np.abs(A @ ones)))
    distance = np.sum((traj.states - c * ones[None, :]) ** 2, axis=1)
    passed = a_one <= config.structure_tol * max(1.0, inf_norm(A))
    return HarmonicCheck(c=c, a_one_norm=a_one, drift=_drift(distance), passed=passed)


def conservation_report(
    traj: Trajectory,
    A,
    observables: Optional[Dict[str, np.ndarray]] = None,
    c: float = 1.0,
) -> ConservationReport:
    """Max drift of H, ||u||^2 and each commuting observable along a skew flow.

    Observables that do not commute with A are listed but not checked.
    """
    if traj.generator is not FlowGenerator.A:
        raise NotSkewFlowError(traj.generator.value)
    A = require_skew(A)

    drifts = []
    for name, P in (observables or {}).items():
        P = np.asarray(P, dtype=float)
        norm = commutator_norm(A, P)
        if not commutes(A, P):
            logger.info("Observable %s does not commute with A (%.3e); skipped", name, norm)
            drifts.append(ObservableDrift(name=name, commutator_norm=norm, commutes=False))
            continue
        values = np.einsum("ti,ij,tj->t", traj.states, P, traj.states)
        drifts.append(
            ObservableDrift(name=name, commutator_norm=norm, commutes=True, drift=_drift(values))
        )

    h_drift = _drift(traj.hamiltonian)
    n_drift = _drift(traj.norm2)
    return ConservationReport(
        hamiltonian_drift=h_drift,
        hamiltonian_relative_drift=_relative(h_drift, float(traj.hamiltonian[0])),
        norm_drift=n_drift,
        norm_relative_drift=_relative(n_drift, float(traj.norm2[0])),
        observables=drifts,
        harmonic=harmonic_check(traj, A, c),
    )
