"""Time integration of u-frame flows driven by S, A or S + A."""

import logging
import math
from typing import Dict, Optional, Union

import numpy as np
from scipy.linalg import expm

from ..config import config
from ..errors import DimensionMismatchError, FlowStepTooLargeError, NegativeTimeError
from ..markov.propagation import rk4_step_matrix
from ..models.decomposition import Decomposition
from ..models.spectrum import SkewSpectrum
from ..models.trajectory import FlowGenerator, Scheme, Trajectory
from ..spectral.skew import gram_sqrt, skew_spectrum

logger = logging.getLogger(__name__)


def sample_times(t_end: float, h: float) -> np.ndarray:
    """Multiples of h up to t_end, with t_end appended when it is not a multiple."""
    m = int(math.floor(t_end / h + 1e-9))
    times = h * np.arange(m + 1, dtype=float)
    if t_end - times[-1] > 1e-9 * h:
        times = np.append(times, t_end)
    return times


def _block_rotation(lambdas: np.ndarray, n: int, t: float) -> np.ndarray:
    """exp(H1 t): rotations [[cos lt, sin lt], [-sin lt, cos lt]] then identity."""
    R = np.eye(n)
    for j, lam in enumerate(lambdas):
        c, s = math.cos(lam * t), math.sin(lam * t)
        a, b = 2 * j, 2 * j + 1
        R[a, a] = R[b, b] = c
        R[a, b] = s
        R[b, a] = -s
    return R


def _generator_matrix(decomposition: Decomposition, generator: FlowGenerator) -> np.ndarray:
    if generator is FlowGenerator.S:
        return decomposition.S
    if generator is FlowGenerator.A:
        return decomposition.A
    return decomposition.generator


def _stepped(G: np.ndarray, u0: np.ndarray, times: np.ndarray, step_matrix, h: float) -> np.ndarray:
    """Advance sample to sample with a propagator built by ``step_matrix(G, dt)``."""
    states = np.empty((len(times), len(u0)))
    states[0] = u0
    full = step_matrix(G, h)
    limit = config.blowup_factor * max(1.0, float(np.abs(u0).sum()))
    u = u0
    for k in range(1, len(times)):
        dt = times[k] - times[k - 1]
        P = full if abs(dt - h) <= 1e-12 * h else step_matrix(G, dt)
        u = P @ u
        norm = float(np.abs(u).sum())
        if not math.isfinite(norm) or norm > limit:
            raise FlowStepTooLargeError(h, norm)
        states[k] = u
    return states


def _exact_states(
    decomposition: Decomposition,
    generator: FlowGenerator,
    u0: np.ndarray,
    times: np.ndarray,
    spectrum: SkewSpectrum,
    h: float,
) -> np.ndarray:
    if generator is FlowGenerator.A:
        # rotation in the canonical frame, evaluated at each sample time
        B = spectrum.B
        w0 = B @ u0
        return np.array(
            [B.T @ (_block_rotation(spectrum.lambdas, len(u0), t) @ w0) for t in times]
        )
    if generator is FlowGenerator.S:
        w, W = np.linalg.eigh(decomposition.S)
        coeffs = W.T @ u0
        return (np.exp(np.outer(times, w)) * coeffs[None, :]) @ W.T
    return _stepped(decomposition.generator, u0, times, lambda G, dt: expm(G * dt), h)


def flow(
    decomposition: Decomposition,
    generator: Union[FlowGenerator, str],
    u0,
    t_end: float,
    h: Optional[float] = None,
    scheme: Union[Scheme, str] = Scheme.RK4,
    observables: Optional[Dict[str, np.ndarray]] = None,
    spectrum: Optional[SkewSpectrum] = None,
) -> Trajectory:
    """Integrate du/dt = G u with G one of S, A, S + A from ``decomposition``.

    Samples are taken at multiples of ``h`` (plus ``t_end``). Diagnostics at
    each sample: H(u) of the skew part, ||u||^2, Phi(u) and <u, P u> for every
    named observable P. ``spectrum`` must be the spectrum of ``decomposition.A``
    when given.
    """
    generator = FlowGenerator(generator)
    scheme = Scheme(scheme)
    h = config.default_step if h is None else h
    if not h > 0:
        raise FlowStepTooLargeError(h, float("nan"))
    if t_end < 0:
        raise NegativeTimeError(t_end)

    n = decomposition.n
    u0 = np.asarray(u0, dtype=float)
    if u0.shape != (n,):
        raise DimensionMismatchError(n, u0.size, "u0")

    spectrum = spectrum if spectrum is not None else skew_spectrum(decomposition.A)
    times = sample_times(t_end, h)
    logger.debug(
        "Flow %s/%s: n=%d, %d samples, h=%g", generator.value, scheme.value, n, len(times), h
    )

    if scheme is Scheme.RK4:
        G = _generator_matrix(decomposition, generator)
        states = _stepped(G, u0, times, rk4_step_matrix, h)
    else:
        states = _exact_states(decomposition, generator, u0, times, spectrum, h)

    sqrt_gram = gram_sqrt(decomposition.A, spectrum)
    S = decomposition.S
    diagnostics = {
        name: np.einsum("ti,ij,tj->t", states, np.asarray(P, dtype=float), states)
        for name, P in (observables or {}).items()
    }
    return Trajectory(
        times=times,
        states=states,
        generator=generator,
        scheme=scheme,
        hamiltonian=0.5 * np.einsum("ti,ij,tj->t", states, sqrt_gram, states),
        norm2=np.einsum("ti,ti->t", states, states),
        potential=-0.5 * np.einsum("ti,ij,tj->t", states, S, states),
        observables=diagnostics,
    )
