"""Hamiltonian and Schrödinger-like representations of the skew flow du/dt = A u."""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import expm

from ..errors import DimensionMismatchError
from ..models.spectrum import HamiltonianRep, SkewSpectrum
from ..spectral.skew import gram_sqrt, require_skew, skew_spectrum

logger = logging.getLogger(__name__)

# Tr[Sigma B u u^T B^T] = u^T (A^T A)^(1/2) u = HEISENBERG_FACTOR * H(u)
HEISENBERG_FACTOR = 2.0


def _vector(u, n: int, what: str = "u") -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.shape[0] != n:
        raise DimensionMismatchError(n, u.shape[0] if u.ndim == 1 else u.size, what)
    return u


def hamiltonian(A, u, spectrum: Optional[SkewSpectrum] = None) -> float:
    """H(u) = u^T (A^T A)^(1/2) u / 2."""
    A = require_skew(A)
    u = _vector(u, A.shape[0])
    return float(0.5 * u @ gram_sqrt(A, spectrum) @ u)


def canonical_coordinates(B, u, n_pairs: int) -> Tuple[np.ndarray, np.ndarray]:
    """Split B u into the (x_j, y_j) pairs and the kernel components.

    Returns a (n_pairs, 2) array and the remaining kernel coordinates.
    """
    B = np.asarray(B, dtype=float)
    w = B @ _vector(u, B.shape[0])
    return w[: 2 * n_pairs].reshape(n_pairs, 2), w[2 * n_pairs:]


def hamiltonian_canonical(spectrum: SkewSpectrum, u) -> float:
    """H(u) = sum_j lambda_j (x_j^2 + y_j^2) / 2 in canonical coordinates."""
    pairs, _ = canonical_coordinates(spectrum.B, u, spectrum.n_pairs)
    return float(0.5 * np.sum(spectrum.lambdas * np.sum(pairs**2, axis=1)))


def hamiltonian_heisenberg(Sigma, B, u) -> float:
    """Trace form Tr[Sigma (B u u^T B^T)].

    Numerically this equals u^T (A^T A)^(1/2) u, i.e. HEISENBERG_FACTOR * H(u).
    """
    Sigma = np.asarray(Sigma, dtype=float)
    B = np.asarray(B, dtype=float)
    n = B.shape[0]
    if Sigma.shape != (n, n):
        raise DimensionMismatchError(n, Sigma.shape[0], "Sigma")
    u = _vector(u, n)
    w = B @ u
    return float(np.trace(Sigma @ np.outer(w, w)))


def hermitian_generator(A) -> np.ndarray:
    """The Hermitian matrix H = -iA with du/dt = i H u."""
    return -1j * require_skew(A)


def hamiltonian_rep(A, spectrum: Optional[SkewSpectrum] = None) -> HamiltonianRep:
    spectrum = spectrum if spectrum is not None else skew_spectrum(A)
    return HamiltonianRep(
        sqrt_gram=gram_sqrt(A, spectrum),
        sigma=spectrum.sigma,
        B=spectrum.B,
        hermitian_H=hermitian_generator(A),
    )


def schrodinger_hamiltonian(hermitian_H, u) -> float:
    """u^T (H^2)^(1/2) u / 2, the Hamiltonian written with the Hermitian generator."""
    hermitian_H = np.asarray(hermitian_H, dtype=complex)
    u = _vector(u, hermitian_H.shape[0])
    mu, W = np.linalg.eigh(hermitian_H)
    root = (W * np.abs(mu)[None, :]) @ W.conj().T
    return float(0.5 * np.real(u @ root @ u))


def schrodinger_flow(hermitian_H, u0, times) -> np.ndarray:
    """Complex solution of du/dt = i H u sampled at ``times`` (rows)."""
    hermitian_H = np.asarray(hermitian_H, dtype=complex)
    u0 = np.asarray(u0, dtype=complex)
    if u0.shape != (hermitian_H.shape[0],):
        raise DimensionMismatchError(hermitian_H.shape[0], u0.size, "u0")
    mu, W = np.linalg.eigh(hermitian_H)
    coeffs = W.conj().T @ u0
    phases = np.exp(1j * np.outer(np.asarray(times, dtype=float), mu))
    return (phases * coeffs[None, :]) @ W.T


def frame_generators(spectrum: SkewSpectrum) -> Tuple[np.ndarray, np.ndarray]:
    """Generators of the flow in the SVD frame (V^T u) and the eigen frame (X* u).

    The first equals H~1 Sigma = H1, the second diag(i l1, -i l1, ..., 0).
    """
    A, V, X = spectrum.A, spectrum.V, spectrum.eigvecs
    return V.T @ A @ V, X.conj().T @ A @ X


def density_commutator_residual(A, rho0, t: float, dt: float = 1e-5) -> float:
    """Compare d/dt rho with i[H rho - rho H] for rho(t) = e^{At} rho0 e^{A^T t}.

    The derivative is a central difference; returns the max-abs deviation.
    """
    A = require_skew(A)
    rho0 = np.asarray(rho0, dtype=float)
    if rho0.shape != A.shape:
        raise DimensionMismatchError(A.shape[0], rho0.shape[0], "rho0")

    def rho(s: float) -> np.ndarray:
        E = expm(A * s)
        return E @ rho0 @ E.T

    derivative = (rho(t + dt) - rho(t - dt)) / (2.0 * dt)
    H = hermitian_generator(A)
    current = rho(t)
    commutator = 1j * (H @ current - current @ H)
    return float(np.abs(derivative - commutator).max())
