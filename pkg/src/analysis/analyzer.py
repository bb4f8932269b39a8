"""Full analysis pipeline: validate, pi, decomposition, spectrum, entropy, diagnostics."""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from .. import __version__
from ..decomposition.split import u_frame
from ..dynamics.conservation import harmonic_check
from ..dynamics.flow import flow
from ..dynamics.hamiltonian import hamiltonian, hamiltonian_heisenberg
from ..entropy.production import trace_identity
from ..errors import InputFormatError, MarkovCoreError, SkewMarkovError
from ..formats.generator_parser import GeneratorParser
from ..markov.generator import validate_generator
from ..markov.stationary import stationary_distribution
from ..models.decomposition import Decomposition
from ..models.entropy_report import EntropyReport
from ..models.generator import GeneratorMatrix, GeneratorSource, StationaryDistribution
from ..models.report import (
    AnalysisReport,
    DecompositionInfo,
    DiagnosticsInfo,
    EdgeInfo,
    EntropyInfo,
    ErrorInfo,
    HarmonicInfo,
    HeisenbergInfo,
    InputInfo,
    SpectrumInfo,
    StationaryInfo,
    ViolationInfo,
)
from ..models.spectrum import SkewSpectrum
from ..models.trajectory import FlowGenerator, Scheme
from ..spectral.skew import skew_spectrum
from ..validation.invariant_checker import InvariantChecker, InvariantIssue

logger = logging.getLogger(__name__)

# diagnostic skew flow used for the harmonic check
DIAGNOSTIC_T_END = 1.0
DIAGNOSTIC_STEP = 0.05


@dataclass
class ChainAnalysis:
    """Intermediate results of one analysis run."""

    Q: GeneratorMatrix
    pi: StationaryDistribution
    decomposition: Decomposition
    flux_spectrum: SkewSpectrum
    skew_spectrum: SkewSpectrum
    entropy: EntropyReport
    issues: List[InvariantIssue] = field(default_factory=list)


def exit_code(report: AnalysisReport) -> int:
    """0 for ok, 2 for invariant violations, 1 for input errors."""
    if report.status == "ok":
        return 0
    if report.status == "violation":
        return 2
    return 1


def _is_input_error(error: SkewMarkovError) -> bool:
    return isinstance(error, (InputFormatError, MarkovCoreError))


class ChainAnalyzer:
    """
    Runs the analysis pipeline and assembles an AnalysisReport.

    Strategy:
    1. Parse and validate the generator (input errors end the run, exit 1)
    2. Stationary distribution and the two-frame decomposition
    3. Spectra of the flux matrix (reported) and of A (dynamics)
    4. Entropy production and the trace identity
    5. Diagnostics: harmonic check on a seeded skew flow, Heisenberg factor
    """

    def __init__(self, verbose: bool = False, seed: int = 0):
        """
        Initialize the analyzer.

        Args:
            verbose: Include full matrices and per-edge detail in reports
            seed: Seed of the diagnostic test vector
        """
        self.verbose = verbose
        self.seed = seed
        self.parser = GeneratorParser()
        self.checker = InvariantChecker()

    def analyze_file(
        self,
        file_path: str,
        convention: Optional[str] = None,
        progress_callback: Optional[Callable[[str], None]] = None,
    ) -> AnalysisReport:
        try:
            source = self.parser.parse(file_path, convention=convention)
        except InputFormatError as e:
            return self._error_report(e, status="error")
        return self.analyze_source(source, progress_callback=progress_callback)

    def analyze_source(
        self,
        source: GeneratorSource,
        progress_callback: Optional[Callable[[str], None]] = None,
    ) -> AnalysisReport:
        """Analyze a parsed generator; library errors become error blocks."""
        n = source.raw.shape[0] if source.raw.ndim == 2 else 0
        report = AnalysisReport(
            version=__version__,
            status="ok",
            input=InputInfo(
                file=source.path or "<string>",
                n=n,
                convention=source.convention,
                sha256=source.sha256,
                labels=list(source.labels) if source.labels else [f"s{i + 1}" for i in range(n)],
            ),
        )

        try:
            analysis = self.run(source, report, progress_callback)
        except SkewMarkovError as e:
            logger.debug("Analysis stopped in %s: %s", e.module, e)
            report.status = "error" if _is_input_error(e) else "violation"
            report.error = ErrorInfo(**e.to_dict())
            return report

        report.violations = [
            ViolationInfo(check=i.check, value=i.value, tolerance=i.tolerance, module=i.module)
            for i in analysis.issues
        ]
        if analysis.issues:
            report.status = "violation"
        return report

    def run(
        self,
        source: GeneratorSource,
        report: AnalysisReport,
        progress_callback: Optional[Callable[[str], None]] = None,
    ) -> ChainAnalysis:
        """Execute the pipeline, filling ``report`` section by section."""

        def stage(name: str) -> None:
            logger.debug("Stage: %s", name)
            if progress_callback:
                progress_callback(name)

        stage("validate")
        Q = validate_generator(source.raw, source.convention, source.labels)
        Q.require_irreducible()
        report.input.labels = list(Q.labels)

        stage("stationary")
        pi = stationary_distribution(Q)
        issues = self.checker.check_stationary(Q, pi)[1]
        report.stationary = StationaryInfo(pi=pi.pi.tolist(), residual=pi.residual)

        stage("decomposition")
        decomposition = u_frame(Q, pi)
        residuals = self.checker.decomposition_residuals(Q, pi, decomposition)
        issues += self.checker.check_decomposition(Q, pi, decomposition, residuals)[1]
        report.decomposition = DecompositionInfo(**residuals, **self._matrices(decomposition))

        stage("spectrum")
        flux_spectrum = skew_spectrum(decomposition.flux_A)
        dynamics_spectrum = skew_spectrum(decomposition.A)
        issues += self.checker.check_spectrum(flux_spectrum)[1]
        report.spectrum = self._spectrum_info(flux_spectrum)

        stage("entropy")
        entropy = trace_identity(Q, pi, flux_spectrum)
        issues += self.checker.check_entropy(entropy)[1]
        report.entropy = self._entropy_info(entropy)

        stage("diagnostics")
        report.diagnostics = self._diagnostics(decomposition, dynamics_spectrum)

        return ChainAnalysis(
            Q=Q,
            pi=pi,
            decomposition=decomposition,
            flux_spectrum=flux_spectrum,
            skew_spectrum=dynamics_spectrum,
            entropy=entropy,
            issues=issues,
        )

    def diagnostic_vector(self, n: int) -> np.ndarray:
        """Seeded unit test vector in the u-frame."""
        rng = np.random.default_rng(self.seed)
        u = rng.standard_normal(n)
        return u / np.linalg.norm(u)

    def _diagnostics(self, decomposition: Decomposition, spectrum: SkewSpectrum) -> DiagnosticsInfo:
        u = self.diagnostic_vector(decomposition.n)
        traj = flow(
            decomposition,
            FlowGenerator.A,
            u,
            DIAGNOSTIC_T_END,
            h=DIAGNOSTIC_STEP,
            scheme=Scheme.EXPM,
            spectrum=spectrum,
        )
        harmonic = harmonic_check(traj, decomposition.A)

        H = hamiltonian(decomposition.A, u, spectrum)
        trace_form = hamiltonian_heisenberg(spectrum.Sigma, spectrum.B, u)
        return DiagnosticsInfo(
            harmonic=HarmonicInfo(
                a_one_norm=harmonic.a_one_norm, drift=harmonic.drift, passed=harmonic.passed
            ),
            heisenberg=HeisenbergInfo(
                hamiltonian=H, trace_form=trace_form, ratio=trace_form / H if H > 0 else None
            ),
        )

    def _matrices(self, decomposition: Decomposition) -> dict:
        if not self.verbose:
            return {}
        return {
            "S": decomposition.S.tolist(),
            "A": decomposition.A.tolist(),
            "flux_A": decomposition.flux_A.tolist(),
        }

    def _spectrum_info(self, spectrum: SkewSpectrum) -> SpectrumInfo:
        extra = {}
        if self.verbose:
            extra = {
                "B": spectrum.B.tolist(),
                "H1": spectrum.H1.tolist(),
                "U": spectrum.U.tolist(),
                "V": spectrum.V.tolist(),
            }
        return SpectrumInfo(
            lambdas=spectrum.lambdas.tolist(),
            zero_multiplicity=spectrum.zero_multiplicity,
            residuals=spectrum.residuals(),
            **extra,
        )

    def _entropy_info(self, entropy: EntropyReport) -> EntropyInfo:
        per_edge = None
        if self.verbose:
            per_edge = [
                EdgeInfo(i=e.i, j=e.j, flux=e.flux, affinity=e.affinity) for e in entropy.per_edge
            ]
        return EntropyInfo(
            ep=entropy.ep,
            ep_near_eq=entropy.ep_near_eq,
            near_eq_ratio=entropy.near_eq_ratio,
            trace_gram=entropy.trace_gram,
            sum_a2=entropy.sum_a2,
            sum_lambda2=entropy.sum_lambda2,
            dynamics_trace=entropy.dynamics_trace,
            max_relative_discrepancy=entropy.max_relative_discrepancy,
            per_edge=per_edge,
        )

    def _error_report(self, error: SkewMarkovError, status: str) -> AnalysisReport:
        return AnalysisReport(version=__version__, status=status, error=ErrorInfo(**error.to_dict()))
