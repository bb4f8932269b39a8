"""Randomized verification of the library's invariants over seeded chains.

Each trial draws a chain size and seed, builds a general chain and runs every
applicable suite on it. The reversible-null and harmonic suites build their own
reversible and cycle chains of the same size. Suites
record (value, tolerance) measurements; library errors inside a suite are
recorded as failures of that suite, never raised.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.linalg import expm

from ..config import config
from ..decomposition.frame import from_u, to_u
from ..decomposition.gradient import potential, potential_gradient
from ..decomposition.split import u_frame
from ..dynamics.conservation import conservation_report, harmonic_check
from ..dynamics.flow import flow, sample_times
from ..dynamics.hamiltonian import (
    HEISENBERG_FACTOR,
    frame_generators,
    hamiltonian,
    hamiltonian_canonical,
    hamiltonian_heisenberg,
    hamiltonian_rep,
    hermitian_generator,
    schrodinger_flow,
    schrodinger_hamiltonian,
)
from ..entropy.production import (
    entropy_production,
    flux_sum_of_squares,
    near_equilibrium_ep,
    trace_identity,
)
from ..errors import SkewMarkovError
from ..markov.density import density_matrix_init, density_matrix_propagate, identity_density
from ..markov.generator import ChainKind, perturbed_chain, random_chain, validate_generator
from ..markov.propagation import propagate
from ..markov.stationary import stationary_distribution
from ..models.decomposition import Decomposition
from ..models.generator import GeneratorMatrix, ProbabilityVector, StationaryDistribution
from ..models.spectrum import SkewSpectrum
from ..models.trajectory import FlowGenerator, Scheme
from ..spectral.relation import evd_svd_relation
from ..spectral.skew import gram_sqrt, inf_norm, skew_spectrum
from .invariant_checker import InvariantChecker

logger = logging.getLogger(__name__)

# flow-based suites only run on the first trials
FLOW_TRIALS = 50
DENSITY_TRIALS = 20
NEAR_EQ_TRIALS = 10
EPSILONS = (1e-1, 1e-2, 1e-3)
DENSITY_TIMES = (0.1, 1.0, 10.0)


class Fault(str, Enum):
    """Deliberate defects for mutation-testing the suite itself."""

    FLUX_SIGN = "flux-sign"  # flip the sign of the largest flux entry


@dataclass
class Measurement:
    """One residual compared against its tolerance."""

    suite: str
    check: str
    value: float
    tolerance: float
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and math.isfinite(self.value) and self.value <= self.tolerance

    @property
    def ratio(self) -> float:
        """value / tolerance; infinite for errors and for any excess over a zero tolerance."""
        if self.error is not None or not math.isfinite(self.value):
            return math.inf
        if self.tolerance > 0:
            return self.value / self.tolerance
        return 0.0 if self.value <= 0 else math.inf


@dataclass
class SuiteResult:
    """Aggregate of one suite over all trials it ran on."""

    name: str
    trials: int = 0
    passed: int = 0
    checks: int = 0
    worst_check: Optional[str] = None
    worst_value: float = 0.0
    worst_tolerance: float = 0.0
    worst_ratio: float = 0.0
    failures: List[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.trials - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteStats:
    """Statistics for a verification run."""

    total: int = 0
    completed: int = 0
    failed_trials: int = 0
    elapsed: float = 0.0
    suites: Dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return self.completed == self.total and all(s.ok for s in self.suites.values())


@dataclass
class TrialContext:
    """Everything one trial computes once and shares between suites."""

    index: int
    chain_seed: int
    family_seed: int
    rng: np.random.Generator
    Q: GeneratorMatrix
    pi: StationaryDistribution
    decomposition: Decomposition
    fault: Optional[Fault] = None

    @property
    def n(self) -> int:
        return self.Q.n

    @cached_property
    def flux_A(self) -> np.ndarray:
        flux = np.array(self.decomposition.flux_A)
        if self.fault is Fault.FLUX_SIGN and flux.size:
            i, j = np.unravel_index(int(np.argmax(np.abs(flux))), flux.shape)
            flux[i, j] = -flux[i, j]
        return flux

    @cached_property
    def flux_spectrum(self) -> SkewSpectrum:
        return skew_spectrum(self.flux_A)

    @cached_property
    def skew_spectrum(self) -> SkewSpectrum:
        return skew_spectrum(self.decomposition.A)

    def family_chain(
        self, kind: ChainKind
    ) -> Tuple[GeneratorMatrix, StationaryDistribution, Decomposition]:
        """A chain of the trial size from another family, seeded per trial."""
        Q = random_chain(self.n, self.family_seed, kind=kind)
        pi = stationary_distribution(Q)
        return Q, pi, u_frame(Q, pi)

    def random_probability(self) -> ProbabilityVector:
        return ProbabilityVector.from_values(self.rng.dirichlet(np.ones(self.n)))

    def random_unit(self) -> np.ndarray:
        u = self.rng.standard_normal(self.n)
        return u / np.linalg.norm(u)


class _Recorder:
    def __init__(self):
        self.measurements: List[Measurement] = []

    def check(self, suite: str, name: str, value: float, tolerance: float) -> None:
        self.measurements.append(Measurement(suite, name, float(value), float(tolerance)))

    def fail(self, suite: str, error: Exception) -> None:
        message = f"{type(error).__name__}: {error}"
        self.measurements.append(Measurement(suite, "error", math.inf, 0.0, error=message))


def _max_abs(M) -> float:
    M = np.asarray(M)
    return float(np.max(np.abs(M))) if M.size else 0.0


def _relative(drift: float, reference: float, floor: float = 1e-300) -> float:
    return drift / max(abs(reference), floor)


class VerificationSuite:
    """
    Runs every invariant suite over ``trials`` seeded random chains.

    Trials are independent and may run on a thread pool; results are merged
    in trial order so the summary is deterministic for a given seed.
    """

    def __init__(
        self,
        trials: int = 200,
        nmax: int = 12,
        seed: int = 1,
        workers: Optional[int] = None,
        fault: Optional[str] = None,
    ):
        if trials < 1:
            raise ValueError(f"trials must be >= 1, got {trials}")
        if nmax < 2:
            raise ValueError(f"nmax must be >= 2, got {nmax}")
        self.trials = trials
        self.nmax = nmax
        self.seed = seed
        self.workers = workers or config.verify_workers
        self.fault = Fault(fault) if fault else None
        self.checker = InvariantChecker()

    # Suite registry: (name, applies-to-trial predicate, method)
    def _suites(self):
        return [
            ("generator", lambda i: True, self._suite_generator),
            ("stationary", lambda i: True, self._suite_stationary),
            ("decomposition", lambda i: True, self._suite_decomposition),
            ("gradient", lambda i: i < FLOW_TRIALS, self._suite_gradient),
            ("canonical", lambda i: True, self._suite_canonical),
            ("trace_identity", lambda i: True, self._suite_trace_identity),
            ("entropy", lambda i: True, self._suite_entropy),
            ("reversible_null", lambda i: True, self._suite_reversible_null),
            ("conservation", lambda i: i < FLOW_TRIALS, self._suite_conservation),
            ("frame_equivalence", lambda i: i < FLOW_TRIALS, self._suite_frame_equivalence),
            ("schrodinger", lambda i: i < FLOW_TRIALS, self._suite_schrodinger),
            ("density", lambda i: i < DENSITY_TRIALS, self._suite_density),
            ("near_equilibrium", lambda i: i < NEAR_EQ_TRIALS, self._suite_near_equilibrium),
            ("harmonic", lambda i: i < FLOW_TRIALS, self._suite_harmonic),
        ]

    @property
    def suite_names(self) -> List[str]:
        return [name for name, _, _ in self._suites()]

    def run(self, progress_callback: Optional[Callable[[int, int], None]] = None) -> SuiteStats:
        """
        Run all trials.

        Args:
            progress_callback: Called with (completed, total) after each trial

        Returns:
            SuiteStats with per-suite pass counts and worst residuals
        """
        stats = SuiteStats(total=self.trials)
        stats.suites = {name: SuiteResult(name=name) for name in self.suite_names}
        started = time.perf_counter()

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            for measurements in pool.map(self.run_trial, range(self.trials)):
                self._merge(stats, measurements)
                stats.completed += 1
                if progress_callback:
                    progress_callback(stats.completed, stats.total)

        stats.elapsed = time.perf_counter() - started
        logger.info(
            "Verification: %d trials, %d failed, %.2fs",
            stats.completed,
            stats.failed_trials,
            stats.elapsed,
        )
        return stats

    def run_trial(self, index: int) -> List[Measurement]:
        rng = np.random.default_rng([self.seed, index])
        n = int(rng.integers(2, self.nmax + 1))
        chain_seed = int(rng.integers(2**31))
        family_seed = int(rng.integers(2**31))
        recorder = _Recorder()

        try:
            Q = random_chain(n, chain_seed, kind=ChainKind.GENERAL)
            pi = stationary_distribution(Q)
            decomposition = u_frame(Q, pi)
        except SkewMarkovError as e:
            recorder.fail("generator", e)
            return recorder.measurements

        ctx = TrialContext(
            index=index,
            chain_seed=chain_seed,
            family_seed=family_seed,
            rng=rng,
            Q=Q,
            pi=pi,
            decomposition=decomposition,
            fault=self.fault,
        )
        for name, applies, suite in self._suites():
            if not applies(index):
                continue
            try:
                suite(ctx, recorder)
            except (SkewMarkovError, np.linalg.LinAlgError) as e:
                logger.debug("Trial %d suite %s raised %s", index, name, e)
                recorder.fail(name, e)
        return recorder.measurements

    def _merge(self, stats: SuiteStats, measurements: List[Measurement]) -> None:
        by_suite: Dict[str, List[Measurement]] = {}
        for m in measurements:
            by_suite.setdefault(m.suite, []).append(m)

        trial_failed = False
        for name, items in by_suite.items():
            result = stats.suites[name]
            result.trials += 1
            result.checks += len(items)
            if all(m.passed for m in items):
                result.passed += 1
            else:
                trial_failed = True
            for m in items:
                if m.ratio > result.worst_ratio or result.worst_check is None:
                    result.worst_ratio = m.ratio
                    result.worst_check = m.check
                    result.worst_value = m.value
                    result.worst_tolerance = m.tolerance
                if not m.passed and len(result.failures) < 5:
                    detail = f"{m.check}: {m.value:.3e} > {m.tolerance:.3e}"
                    result.failures.append(m.error or detail)
        if trial_failed:
            stats.failed_trials += 1

    # markov-core

    def _suite_generator(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q = ctx.Q
        column_sums = _max_abs(Q.rates.sum(axis=0))
        rec.check("generator", "column_sums", column_sums, config.column_sum_tol * Q.max_rate)

        p0 = ctx.random_probability()
        p1 = propagate(Q, p0, 1.0)
        rec.check("generator", "probability_sum", abs(p1.values.sum() - 1.0), 1e-10)

        split = propagate(Q, propagate(Q, p0, 0.3), 0.7)
        rec.check("generator", "semigroup", _max_abs(p1.values - split.values), 1e-9)

        rk4 = propagate(Q, p0, 1.0, method="rk4", h=1e-3)
        rec.check("generator", "expm_vs_rk4", _max_abs(p1.values - rk4.values), 1e-7)

    def _suite_stationary(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q, pi = ctx.Q, ctx.pi
        tolerance = config.stationary_residual_tol * Q.inf_norm
        rec.check("stationary", "residual", pi.residual, tolerance)

        held = propagate(Q, pi.as_probability(), 2.0)
        rec.check("stationary", "invariance", _max_abs(held.values - pi.pi), 1e-10)

    # decomposition

    def _suite_decomposition(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q, pi, dec = ctx.Q, ctx.pi, ctx.decomposition
        for name, value, tolerance in self.checker.decomposition_checks(Q, pi, dec):
            rec.check("decomposition", name, value, tolerance)

        tolerance = 1e-10 * Q.inf_norm
        QS = validate_generator(dec.QS)
        fluxes = QS.rates * pi.pi[None, :]
        rec.check("decomposition", "QS_detailed_balance", _max_abs(fluxes - fluxes.T), tolerance)
        rec.check("decomposition", "QA_kernel", _max_abs(dec.QA @ pi.pi), tolerance)
    def _suite_gradient(self, ctx: TrialContext, rec: _Recorder) -> None:
        dec = ctx.decomposition
        S = dec.S
        u = ctx.rng.standard_normal(ctx.n)
        floor = config.psd_tol * inf_norm(S) * float(u @ u)
        rec.check("gradient", "potential_nonnegative", max(0.0, -potential(S, u)), floor)
        rec.check(
            "gradient",
            "potential_stationary",
            abs(potential(S, dec.stationary_amplitude)),
            1e-10 * ctx.Q.inf_norm,
        )

        grad = potential_gradient(S, u)
        delta = 1e-5
        fd = np.array(
            [
                (potential(S, u + delta * e) - potential(S, u - delta * e)) / (2 * delta)
                for e in np.eye(ctx.n)
            ]
        )
        error = _relative(_max_abs(grad - fd), _max_abs(grad), 1e-12)
        rec.check("gradient", "finite_difference", error, 1e-6)

        traj = flow(
            dec,
            FlowGenerator.S,
            ctx.random_unit(),
            1.0,
            h=1e-3,
            scheme=Scheme.RK4,
            spectrum=ctx.skew_spectrum,
        )
        increase = float(np.max(np.diff(traj.potential), initial=0.0))
        rec.check("gradient", "potential_monotone", max(0.0, increase), 1e-9)

    # skew-spectral

    def _suite_canonical(self, ctx: TrialContext, rec: _Recorder) -> None:
        sp = ctx.flux_spectrum
        A, scale = sp.A, sp.scale
        tolerance = 1e-9 * scale
        for name, value, limit in self.checker.spectrum_checks(sp):
            rec.check("canonical", name, value, limit)

        singular = np.sort(np.linalg.svd(A, compute_uv=False))
        pairing = _max_abs(singular - np.sort(sp.sigma))
        rec.check("canonical", "singular_pairing", pairing, tolerance)

        G = gram_sqrt(A, sp)
        rec.check("canonical", "gram_square", _max_abs(G @ G - A.T @ A), tolerance * scale)
        rec.check("canonical", "kernel_nonempty", float(sp.zero_multiplicity < 1), 0.0)
        rec.check("canonical", "block_roundtrip", _max_abs(sp.B.T @ sp.H1 @ sp.B - A), tolerance)

        svd_frame, eigen_frame = frame_generators(sp)
        eigen_target = np.diag(sp.eigensystem.eigenvalues)
        rec.check("canonical", "svd_frame", _max_abs(svd_frame - sp.H1), tolerance)
        rec.check("canonical", "eigen_frame", _max_abs(eigen_frame - eigen_target), tolerance)

        for relation in evd_svd_relation(sp):
            if relation.degenerate:
                continue
            determinant = abs(abs(relation.determinant) - 0.5)
            rec.check("canonical", "relation_residual", relation.residual, 1e-9)
            rec.check("canonical", "relation_determinant", determinant, 1e-9)

    # entropy

    def _suite_trace_identity(self, ctx: TrialContext, rec: _Recorder) -> None:
        report = trace_identity(ctx.Q, ctx.pi, ctx.flux_spectrum)
        rec.check(
            "trace_identity",
            "max_relative_discrepancy",
            report.max_relative_discrepancy,
            config.identity_rel_tol,
        )

    def _suite_entropy(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q, pi = ctx.Q, ctx.pi
        ep, edges = entropy_production(Q, pi)
        rec.check("entropy", "ep_nonnegative", max(0.0, -ep), 0.0)

        max_flux = max((abs(e.flux) for e in edges), default=0.0)
        if max_flux <= 1e-12:
            rec.check("entropy", "ep_detailed_balance", ep, 1e-18)
        else:
            rec.check("entropy", "ep_positive_with_flux", float(ep <= 0.0), 0.0)

        c = 2.5
        Qc = validate_generator(c * Q.rates)
        pic = stationary_distribution(Qc)
        ep_c, _ = entropy_production(Qc, pic)
        near, near_c = near_equilibrium_ep(Q, pi), near_equilibrium_ep(Qc, pic)
        trace, trace_c = flux_sum_of_squares(Q, pi), flux_sum_of_squares(Qc, pic)
        scaled = (
            ("scale_ep", ep_c, c * ep),
            ("scale_near_eq", near_c, c * near),
            ("scale_trace", trace_c, c**2 * trace),
        )
        for name, actual, expected in scaled:
            rec.check("entropy", name, _relative(abs(actual - expected), expected, 1e-15), 1e-9)

        perm = ctx.rng.permutation(ctx.n)
        Qp = validate_generator(Q.rates[np.ix_(perm, perm)])
        ep_p, _ = entropy_production(Qp, stationary_distribution(Qp))
        rec.check("entropy", "relabel_invariance", _relative(abs(ep_p - ep), ep, 1e-15), 1e-9)

    def _suite_reversible_null(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q, pi, dec = ctx.family_chain(ChainKind.REVERSIBLE)
        tolerance = config.stationary_residual_tol * Q.inf_norm
        fluxes = Q.rates * pi.pi[None, :]
        rec.check("reversible_null", "detailed_balance", _max_abs(fluxes - fluxes.T), tolerance)
        rec.check("reversible_null", "skew_part", _max_abs(dec.flux_A), 0.0)

        sp = skew_spectrum(dec.flux_A)
        rec.check("reversible_null", "no_pairs", float(sp.n_pairs), 0.0)
        ep, _ = entropy_production(Q, pi)
        rec.check("reversible_null", "ep_zero", ep, 1e-18)
        rec.check("reversible_null", "near_eq_zero", near_equilibrium_ep(Q, pi), 1e-18)
        report = trace_identity(Q, pi, sp)
        rec.check(
            "reversible_null",
            "trace_identity",
            report.max_relative_discrepancy,
            config.identity_rel_tol,
        )

    def _suite_near_equilibrium(self, ctx: TrialContext, rec: _Recorder) -> None:
        # a 2-state ring perturbation is symmetric, so use at least 3 states
        n = max(ctx.n, 3)
        deviations = []
        for epsilon in EPSILONS:
            Q = perturbed_chain(n, ctx.chain_seed, epsilon)
            pi = stationary_distribution(Q)
            ep, _ = entropy_production(Q, pi)
            deviation = abs(ep / near_equilibrium_ep(Q, pi) - 1.0)
            rec.check("near_equilibrium", f"ratio_eps_{epsilon:g}", deviation, 10 * epsilon)
            deviations.append(deviation)
        for previous, current in zip(deviations, deviations[1:]):
            rec.check("near_equilibrium", "monotone", max(0.0, current - previous), 1e-12)

    # hamiltonian-dynamics

    def _suite_conservation(self, ctx: TrialContext, rec: _Recorder) -> None:
        dec, sp = ctx.decomposition, ctx.skew_spectrum
        A = dec.A
        u0 = ctx.random_unit()
        observables = {"identity": np.eye(ctx.n), "sqrt_gram": gram_sqrt(A, sp)}

        exact = flow(dec, FlowGenerator.A, u0, 10.0, h=0.1, scheme=Scheme.EXPM, spectrum=sp)
        report = conservation_report(exact, A, observables)
        rec.check("conservation", "hamiltonian_expm", report.hamiltonian_relative_drift, 1e-10)
        rec.check("conservation", "norm_expm", report.norm_relative_drift, 1e-10)
        for obs in report.observables:
            P_norm = inf_norm(observables[obs.name])
            if obs.commutes:
                limit = 1e-10 * max(1.0, P_norm)
                rec.check("conservation", f"observable_{obs.name}", obs.drift, limit)
            else:
                limit = config.commutator_tol * max(1.0, inf_norm(A) * P_norm)
                rec.check("conservation", f"commutes_{obs.name}", obs.commutator_norm, limit)

        stepped = flow(dec, FlowGenerator.A, u0, 10.0, h=1e-3, scheme=Scheme.RK4, spectrum=sp)
        report = conservation_report(stepped, A)
        rec.check("conservation", "hamiltonian_rk4", report.hamiltonian_relative_drift, 1e-6)
        rec.check("conservation", "norm_rk4", report.norm_relative_drift, 1e-6)

        v = ctx.rng.standard_normal(ctx.n)
        v_norm = float(np.linalg.norm(v))
        for t in (0.1, 1.0, 10.0):
            drift = abs(float(np.linalg.norm(expm(A * t) @ v)) - v_norm)
            rec.check("conservation", f"unitarity_t{t:g}", drift, 1e-10 * v_norm)

    def _suite_frame_equivalence(self, ctx: TrialContext, rec: _Recorder) -> None:
        dec = ctx.decomposition
        p0 = ctx.random_probability()
        traj = flow(
            dec,
            FlowGenerator.SA,
            to_u(p0, dec.frame),
            1.0,
            h=0.25,
            scheme=Scheme.EXPM,
            spectrum=ctx.skew_spectrum,
        )
        expected = propagate(ctx.Q, p0, 1.0).values
        error = _max_abs(from_u(traj.final, dec.frame) - expected)
        rec.check("frame_equivalence", "master_equation", error, 1e-8)

    def _suite_schrodinger(self, ctx: TrialContext, rec: _Recorder) -> None:
        dec, sp = ctx.decomposition, ctx.skew_spectrum
        A = dec.A
        scale = max(1.0, inf_norm(A))
        u0 = ctx.random_unit()

        real = flow(dec, FlowGenerator.A, u0, 2.0, h=0.25, scheme=Scheme.EXPM, spectrum=sp)
        H = hermitian_generator(A)
        complex_states = schrodinger_flow(H, u0, sample_times(2.0, 0.25))
        rec.check("schrodinger", "flow_agreement", _max_abs(complex_states - real.states), 1e-9)

        residuals = hamiltonian_rep(A, sp).residuals(A)
        rec.check("schrodinger", "hermitian", residuals["hermitian"], 1e-10 * scale)
        rec.check("schrodinger", "eigenvalue_imag", residuals["eigenvalue_imag"], 1e-9 * scale)
        rec.check("schrodinger", "reconstruction", residuals["reconstruction"], 1e-10 * scale)

        energy = hamiltonian(A, u0, sp)
        paths = (
            ("hermitian_hamiltonian", schrodinger_hamiltonian(H, u0), energy),
            ("canonical_hamiltonian", hamiltonian_canonical(sp, u0), energy),
            (
                "heisenberg_factor",
                hamiltonian_heisenberg(sp.Sigma, sp.B, u0),
                HEISENBERG_FACTOR * energy,
            ),
        )
        for name, actual, expected in paths:
            rec.check("schrodinger", name, abs(actual - expected), 1e-10 * scale)

    # markov-core, density matrices

    def _suite_density(self, ctx: TrialContext, rec: _Recorder) -> None:
        Q = ctx.Q
        rho0 = density_matrix_init(ctx.random_probability())
        identity = identity_density(ctx.n)
        for t in DENSITY_TIMES:
            rho = density_matrix_propagate(Q, rho0, t)
            transition = density_matrix_propagate(Q, identity, t).rho
            rec.check("density", f"trace_t{t:g}", abs(rho.trace - 1.0), 1e-10)
            rec.check("density", f"idempotence_t{t:g}", rho.idempotence_residual, 1e-10)
            column_error = _max_abs(transition.sum(axis=0) - 1.0)
            rec.check("density", f"column_sums_t{t:g}", column_error, 1e-10)
            rec.check("density", f"nonnegative_t{t:g}", max(0.0, -float(transition.min())), 1e-12)

    def _suite_harmonic(self, ctx: TrialContext, rec: _Recorder) -> None:
        _, _, cycle = ctx.family_chain(ChainKind.CYCLE)
        for dec, is_cycle in ((ctx.decomposition, False), (cycle, True)):
            traj = flow(dec, FlowGenerator.A, ctx.random_unit(), 2.0, h=0.25, scheme=Scheme.EXPM)
            check = harmonic_check(traj, dec.A)
            if check.passed:
                reference = float(np.sum((traj.initial - 1.0) ** 2))
                drift = _relative(check.drift, reference, 1.0)
                rec.check("harmonic", "drift_when_passed", drift, 1e-9)
            if is_cycle:
                rec.check("harmonic", "uniform_pi_passes", float(not check.passed), 0.0)
