"""Data models for the structured spectra of skew-symmetric matrices."""

from dataclasses import dataclass
from typing import Optional

import numpy as np


def symplectic_unit(n: int, n_pairs: int) -> np.ndarray:
    """The block matrix with [[0, 1], [-1, 0]] on the first ``n_pairs`` pairs, zero elsewhere."""
    J = np.zeros((n, n))
    for k in range(n_pairs):
        J[2 * k, 2 * k + 1] = 1.0
        J[2 * k + 1, 2 * k] = -1.0
    return J


def paired_sigma(lambdas: np.ndarray, n: int) -> np.ndarray:
    """Singular values (l1, l1, l2, l2, ..., 0, ...) from the pair frequencies."""
    sigma = np.zeros(n)
    sigma[: 2 * len(lambdas)] = np.repeat(lambdas, 2)
    return sigma


def canonical_block(lambdas: np.ndarray, n: int) -> np.ndarray:
    """Real canonical form H1 with 2x2 blocks [[0, l], [-l, 0]] then zeros."""
    return symplectic_unit(n, len(lambdas)) * paired_sigma(lambdas, n)[None, :]


@dataclass(frozen=True)
class SkewEigensystem:
    """Paired eigensystem of a real skew-symmetric matrix.

    Columns of ``eigvecs`` are ordered (x1, conj(x1), x2, conj(x2), ..., kernel)
    with eigenvalues (i l1, -i l1, i l2, -i l2, ..., 0, ...).
    """

    lambdas: np.ndarray
    zero_multiplicity: int
    eigenvalues: np.ndarray
    eigvecs: np.ndarray
    kernel: np.ndarray

    @property
    def n(self) -> int:
        return self.eigvecs.shape[0]

    @property
    def n_pairs(self) -> int:
        return len(self.lambdas)


@dataclass(frozen=True)
class SkewSpectrum:
    """Eigen, canonical and singular-value structure of one skew matrix."""

    A: np.ndarray
    eigensystem: SkewEigensystem
    B: np.ndarray
    H1: np.ndarray
    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def lambdas(self) -> np.ndarray:
        return self.eigensystem.lambdas

    @property
    def n_pairs(self) -> int:
        return self.eigensystem.n_pairs

    @property
    def zero_multiplicity(self) -> int:
        return self.eigensystem.zero_multiplicity

    @property
    def eigvecs(self) -> np.ndarray:
        return self.eigensystem.eigvecs

    @property
    def Sigma(self) -> np.ndarray:
        return np.diag(self.sigma)

    @property
    def H_tilde(self) -> np.ndarray:
        """Symplectic unit on the nonzero pairs, zero on the kernel."""
        return symplectic_unit(self.n, self.n_pairs)

    @property
    def scale(self) -> float:
        """``||A||_inf``, the reference for relative residuals."""
        return float(np.max(np.sum(np.abs(self.A), axis=1))) if self.n else 0.0

    def residuals(self) -> dict:
        """Structural residuals of the spectrum (absolute, max-abs norm)."""
        n, k = self.n, self.n_pairs
        VtU = self.V.T @ self.U
        pairs = slice(0, 2 * k)
        kernel = slice(2 * k, n)
        symplectic = np.abs(VtU[pairs, pairs] - self.H_tilde[pairs, pairs]).max() if k else 0.0
        off_block = max(
            np.abs(VtU[pairs, kernel]).max() if k and n > 2 * k else 0.0,
            np.abs(VtU[kernel, pairs]).max() if k and n > 2 * k else 0.0,
        )
        return {
            "canonical_form": float(np.abs(self.B @ self.A @ self.B.T - self.H1).max()),
            "basis_orthogonality": float(np.abs(self.B.T @ self.B - np.eye(n)).max()),
            "svd_reconstruction": float(np.abs(self.U @ self.Sigma @ self.V.T - self.A).max()),
            "svd_symplectic": float(max(symplectic, off_block)),
            "pairing": pairing_residual(self.U, self.V, k),
            "h_tilde_sigma": float(np.abs(self.H_tilde @ self.Sigma - self.H1).max()),
        }


def pairing_residual(U: np.ndarray, V: np.ndarray, n_pairs: int) -> float:
    """Max deviation from v_{2k-1} = u_{2k}, v_{2k} = -u_{2k-1}."""
    if n_pairs == 0:
        return 0.0
    odd = slice(0, 2 * n_pairs, 2)
    even = slice(1, 2 * n_pairs, 2)
    return float(
        max(np.abs(V[:, odd] - U[:, even]).max(), np.abs(V[:, even] + U[:, odd]).max())
    )


@dataclass(frozen=True)
class PairRelation:
    """Coefficients expressing a real singular-vector pair in its eigenvector pair."""

    pair: int
    lam: float
    alpha: Optional[np.ndarray]
    residual: Optional[float]
    degenerate: bool = False

    @property
    def determinant(self) -> Optional[complex]:
        if self.alpha is None:
            return None
        return complex(np.linalg.det(self.alpha))


@dataclass(frozen=True)
class HamiltonianRep:
    """Hamiltonian and Schrödinger-like data of a skew generator."""

    sqrt_gram: np.ndarray
    sigma: np.ndarray
    B: np.ndarray
    hermitian_H: np.ndarray

    @property
    def Sigma(self) -> np.ndarray:
        return np.diag(self.sigma)

    def residuals(self, A: np.ndarray) -> dict:
        H = self.hermitian_H
        return {
            "hermitian": float(np.abs(H - H.conj().T).max()),
            "eigenvalue_imag": float(np.abs(np.linalg.eigvals(H).imag).max()),
            "reconstruction": float(np.abs(1j * H - A).max()),
        }
