"""Structural invariant checks shared by the analyzer and the verification suite."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import config
from ..decomposition.split import flux_matrix
from ..models.decomposition import Decomposition
from ..models.entropy_report import EntropyReport
from ..models.generator import GeneratorMatrix, StationaryDistribution
from ..models.spectrum import SkewSpectrum


@dataclass
class InvariantIssue:
    """A residual that exceeded its tolerance."""

    check: str
    value: float
    tolerance: float
    module: str  # markov-core, decomposition, skew-spectral, entropy

    @property
    def message(self) -> str:
        return f"{self.check}: {self.value:.3e} > {self.tolerance:.3e} ({self.module})"


def _max_abs(M: np.ndarray) -> float:
    return float(np.max(np.abs(M))) if M.size else 0.0


def _inf_norm(M: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(M), axis=1))) if M.size else 0.0


Check = Tuple[str, float, float]


def _issues(checks: List[Check], module: str) -> List[InvariantIssue]:
    return [
        InvariantIssue(name, value, tolerance, module)
        for name, value, tolerance in checks
        if value > tolerance
    ]


class InvariantChecker:
    """
    Compares computed residuals against their configured tolerances.

    Every ``check_*`` method returns ``(is_valid, issues)``. Matrix residuals
    are absolute max-abs norms; tolerances scale with ``||Q||_inf`` (or
    ``max(||A||_inf, 1)`` for spectra).
    """

    def decomposition_residuals(
        self, Q: GeneratorMatrix, pi: StationaryDistribution, decomposition: Decomposition
    ) -> Dict[str, float]:
        S, A = decomposition.S, decomposition.A
        ft = decomposition.frame
        u_s = decomposition.stationary_amplitude
        M = ft.conjugate(Q.rates)
        return {
            "symmetry": _max_abs(S - S.T),
            "skew": _max_abs(A + A.T),
            "reconstruction": _max_abs(S + A - M),
            "psd_margin": float(np.linalg.eigvalsh(-S).min()) if S.size else 0.0,
            "kernel_S": _max_abs(S @ u_s),
            "kernel_A": _max_abs(A @ u_s),
            "flux_formula": _max_abs(decomposition.flux_A - flux_matrix(Q, pi)),
            "frame_consistency": max(
                _max_abs(ft.conjugate(decomposition.QS) - S),
                _max_abs(ft.conjugate(decomposition.QA) - A),
            ),
        }

    def check_stationary(
        self, Q: GeneratorMatrix, pi: StationaryDistribution
    ) -> Tuple[bool, List[InvariantIssue]]:
        issues = []
        tolerance = config.stationary_residual_tol * Q.inf_norm
        if pi.residual > tolerance:
            issues.append(
                InvariantIssue("stationary_residual", pi.residual, tolerance, "markov-core")
            )
        return len(issues) == 0, issues

    def decomposition_checks(
        self,
        Q: GeneratorMatrix,
        pi: StationaryDistribution,
        decomposition: Decomposition,
        residuals: Optional[Dict[str, float]] = None,
    ) -> List[Check]:
        """(name, value, tolerance) for every decomposition residual."""
        residuals = residuals or self.decomposition_residuals(Q, pi, decomposition)
        tolerance = config.structure_tol * Q.inf_norm
        checks = []
        for name, value in residuals.items():
            if name == "psd_margin":
                # min eigenvalue of -S, allowed to dip slightly below zero
                checks.append((name, max(0.0, -value), config.psd_tol * _inf_norm(decomposition.S)))
            else:
                checks.append((name, value, tolerance))
        return checks

    def spectrum_checks(self, spectrum: SkewSpectrum) -> List[Check]:
        checks = []
        for name, value in spectrum.residuals().items():
            if name in ("basis_orthogonality", "pairing"):
                checks.append((name, value, config.canonical_tol))
            else:
                checks.append((name, value, config.canonical_tol * spectrum.scale))
        return checks

    def check_decomposition(
        self,
        Q: GeneratorMatrix,
        pi: StationaryDistribution,
        decomposition: Decomposition,
        residuals: Optional[Dict[str, float]] = None,
    ) -> Tuple[bool, List[InvariantIssue]]:
        checks = self.decomposition_checks(Q, pi, decomposition, residuals)
        issues = _issues(checks, "decomposition")
        return len(issues) == 0, issues

    def check_spectrum(self, spectrum: SkewSpectrum) -> Tuple[bool, List[InvariantIssue]]:
        issues = _issues(self.spectrum_checks(spectrum), "skew-spectral")
        return len(issues) == 0, issues

    def check_entropy(self, report: EntropyReport) -> Tuple[bool, List[InvariantIssue]]:
        """Sign check only; trace_identity raises on a mismatch before a report exists."""
        issues = []
        if report.ep < 0:
            issues.append(InvariantIssue("ep_nonnegative", -report.ep, 0.0, "entropy"))
        return len(issues) == 0, issues
