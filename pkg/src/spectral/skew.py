"""Structured eigen- and singular-value decompositions of real skew matrices.

The eigenvalues of a real skew matrix A are {+-i l_j} plus zeros. Here the
eigensystem is taken from the Hermitian matrix -iA, the real canonical basis B
is built from the real and imaginary parts of the eigenvectors, and a generic
SVD is rotated (orthogonal Procrustes, per singular-value cluster) into the
symplectic gauge v_{2k-1} = u_{2k}, v_{2k} = -u_{2k-1}.
"""

import logging
import math
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import orthogonal_procrustes

from ..config import config
from ..errors import (
    CanonicalizationFailureError,
    DegenerateRecombinationFailureError,
    NotSkewError,
    SpectrumDriftTooLargeError,
)
from ..models.spectrum import (
    SkewEigensystem,
    SkewSpectrum,
    canonical_block,
    pairing_residual,
)

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)


class SvdGauge(str, Enum):
    """Column ordering inside each singular pair."""

    SYMPLECTIC = "symplectic"  # v_{2k-1} = u_{2k}, v_{2k} = -u_{2k-1}
    SWAPPED = "swapped"  # pair columns exchanged; v_{2k-1} = -u_{2k}, v_{2k} = u_{2k-1}


def inf_norm(M: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(M), axis=1))) if M.size else 0.0


def require_skew(A) -> np.ndarray:
    """Return A as a float array, raising NotSkewError if ||A + A^T|| is too large."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSkewError(float("inf"))
    residual = float(np.max(np.abs(A + A.T))) if A.size else 0.0
    if residual > config.skew_tol * inf_norm(A):
        raise NotSkewError(residual)
    return A


def zero_threshold(lambda_max: float) -> float:
    """Frequencies at or below this count as zero.

    Relative to the largest frequency; the absolute floor only applies to the
    zero matrix.
    """
    if lambda_max > 0:
        return config.zero_eigenvalue_rel * lambda_max
    return config.zero_eigenvalue_abs


def degenerate_clusters(lambdas: np.ndarray) -> List[Tuple[int, int]]:
    """Group consecutive (descending) frequencies that coincide within tolerance.

    Returns half-open pair-index ranges.
    """
    if len(lambdas) == 0:
        return []
    tol = config.degeneracy_rel * float(lambdas[0])
    clusters = []
    start = 0
    for j in range(1, len(lambdas)):
        if lambdas[j - 1] - lambdas[j] > tol:
            clusters.append((start, j))
            start = j
    clusters.append((start, len(lambdas)))
    return clusters


def _fix_phase(x: np.ndarray) -> np.ndarray:
    """Rotate x so its largest-modulus component (first one on ties) is real positive."""
    moduli = np.abs(x)
    top = moduli.max()
    idx = int(np.flatnonzero(moduli >= top * (1.0 - 1e-9))[0])
    return x * (np.conj(x[idx]) / moduli[idx])


def _kernel_basis(A: np.ndarray, dim: int) -> np.ndarray:
    """Real orthonormal basis of ker(A), signs fixed for reproducibility."""
    n = A.shape[0]
    if dim == 0:
        return np.zeros((n, 0))
    if dim == n:
        return np.eye(n)
    _, _, Vt = np.linalg.svd(A)
    kernel = Vt[n - dim:].T.copy()
    for col in range(dim):
        idx = int(np.argmax(np.abs(kernel[:, col])))
        if kernel[idx, col] < 0:
            kernel[:, col] = -kernel[:, col]
    return kernel


def skew_evd(A) -> SkewEigensystem:
    """Paired eigensystem of a real skew matrix.

    Eigenvalues come out as exact conjugate pairs i l, -i l with l sorted
    descending, followed by the zero eigenvalues; the second vector of each
    pair is the complex conjugate of the first.
    """
    A = require_skew(A)
    n = A.shape[0]
    scale = inf_norm(A)

    raw = np.linalg.eigvals(A) if n else np.zeros(0)
    drift = float(np.max(np.abs(raw.real))) if n else 0.0
    if drift > config.spectrum_drift_tol * scale:
        raise SpectrumDriftTooLargeError(drift, config.spectrum_drift_tol * scale)

    hermitian = -1j * A
    hermitian = 0.5 * (hermitian + hermitian.conj().T)
    mu, W = np.linalg.eigh(hermitian)

    lambda_max = float(np.max(np.abs(mu))) if n else 0.0
    threshold = zero_threshold(lambda_max)
    positive = [int(i) for i in np.argsort(-mu) if mu[i] > threshold]
    k = len(positive)
    z = n - 2 * k

    lambdas = mu[positive].astype(float)
    eigvecs = np.zeros((n, n), dtype=complex)
    eigenvalues = np.zeros(n, dtype=complex)
    for j, col in enumerate(positive):
        x = _fix_phase(W[:, col])
        eigvecs[:, 2 * j] = x
        eigvecs[:, 2 * j + 1] = np.conj(x)
        eigenvalues[2 * j] = 1j * lambdas[j]
        eigenvalues[2 * j + 1] = -1j * lambdas[j]

    kernel = _kernel_basis(A, z)
    eigvecs[:, 2 * k:] = kernel
    return SkewEigensystem(
        lambdas=lambdas,
        zero_multiplicity=z,
        eigenvalues=eigenvalues,
        eigvecs=eigvecs,
        kernel=kernel,
    )


def _reorthonormalize(B: np.ndarray) -> np.ndarray:
    """Gram-Schmidt on the rows of B, keeping their order and orientation."""
    Qm, R = np.linalg.qr(B.T)
    signs = np.sign(np.diag(R))
    signs[signs == 0] = 1.0
    return (Qm * signs[None, :]).T


def real_canonical_form(
    A, eigensystem: Optional[SkewEigensystem] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """Orthogonal B with B A B^T = H1, the 2x2-block canonical form.

    Rows of B are sqrt(2) Re x_{2k-1}, sqrt(2) Im x_{2k-1} for each pair, then
    the kernel basis.
    """
    A = require_skew(A)
    es = eigensystem if eigensystem is not None else skew_evd(A)
    n, k = es.n, es.n_pairs

    B = np.zeros((n, n))
    for j in range(k):
        x = es.eigvecs[:, 2 * j]
        B[2 * j] = SQRT2 * x.real
        B[2 * j + 1] = SQRT2 * x.imag
    B[2 * k:] = es.kernel.T

    orthogonality = float(np.max(np.abs(B @ B.T - np.eye(n)))) if n else 0.0
    degenerate = any(stop - start > 1 for start, stop in degenerate_clusters(es.lambdas))
    if degenerate or orthogonality > 1e-12:
        logger.debug(
            "Re-orthogonalizing canonical basis (degenerate=%s, residual=%.3e)",
            degenerate,
            orthogonality,
        )
        B = _reorthonormalize(B)
        orthogonality = float(np.max(np.abs(B @ B.T - np.eye(n))))
        if orthogonality > config.canonical_tol:
            raise DegenerateRecombinationFailureError(orthogonality)

    return B, canonical_block(es.lambdas, n)


def skew_svd(
    A,
    gauge: str = "symplectic",
    eigensystem: Optional[SkewEigensystem] = None,
    canonical: Optional[Tuple[np.ndarray, np.ndarray]] = None,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Canonicalized SVD A = U diag(sigma) V^T.

    A generic SVD is computed, singular values are pair-averaged, and within
    each cluster of equal singular values U's columns are rotated onto the
    canonical basis by orthogonal Procrustes; V inherits the same rotation.
    The kernel block uses V = U.
    """
    A = require_skew(A)
    es = eigensystem if eigensystem is not None else skew_evd(A)
    B, _ = canonical if canonical is not None else real_canonical_form(A, es)
    n, k = es.n, es.n_pairs

    U0, s, V0t = np.linalg.svd(A)
    V0 = V0t.T
    target_U = B.T

    U = np.zeros((n, n))
    V = np.zeros((n, n))
    sigma = np.zeros(n)
    for start, stop in degenerate_clusters(es.lambdas):
        cols = slice(2 * start, 2 * stop)
        rotation, _ = orthogonal_procrustes(U0[:, cols], target_U[:, cols])
        U[:, cols] = U0[:, cols] @ rotation
        V[:, cols] = V0[:, cols] @ rotation
        for j in range(start, stop):
            sigma[2 * j] = sigma[2 * j + 1] = 0.5 * (s[2 * j] + s[2 * j + 1])
    U[:, 2 * k:] = target_U[:, 2 * k:]
    V[:, 2 * k:] = target_U[:, 2 * k:]

    residual = pairing_residual(U, V, k)
    if residual > config.pairing_tol:
        raise CanonicalizationFailureError(residual)

    if SvdGauge(gauge) is SvdGauge.SWAPPED:
        perm = np.arange(n)
        perm[0 : 2 * k : 2] += 1
        perm[1 : 2 * k : 2] -= 1
        U, V, sigma = U[:, perm], V[:, perm], sigma[perm]
    return U, sigma, V


def gram_sqrt(A, spectrum: Optional[SkewSpectrum] = None) -> np.ndarray:
    """(A^T A)^(1/2) = V Sigma V^T."""
    if spectrum is None:
        _, sigma, V = skew_svd(A)
    else:
        sigma, V = spectrum.sigma, spectrum.V
    G = (V * sigma[None, :]) @ V.T
    return 0.5 * (G + G.T)


def skew_spectrum(A) -> SkewSpectrum:
    """Compute the eigensystem, canonical form and canonical SVD in one pass."""
    A = require_skew(A)
    es = skew_evd(A)
    B, H1 = real_canonical_form(A, es)
    U, sigma, V = skew_svd(A, eigensystem=es, canonical=(B, H1))
    return SkewSpectrum(A=A, eigensystem=es, B=B, H1=H1, U=U, sigma=sigma, V=V)
