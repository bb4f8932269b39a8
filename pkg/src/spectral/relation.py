"""Relation between the complex eigenvectors and the real singular vectors of a pair."""

import logging
import math
from typing import List, Tuple

import numpy as np

from ..errors import DegeneratePairError
from ..models.spectrum import PairRelation, SkewSpectrum
from .skew import SvdGauge, degenerate_clusters

logger = logging.getLogger(__name__)


def pair_coefficients(u_pair, x_pair) -> Tuple[np.ndarray, float]:
    """Least-squares alpha with u_pair[:, r] = sum_c alpha[r, c] x_pair[:, c].

    ``u_pair`` is n x 2 real, ``x_pair`` n x 2 complex; the eigenvectors need
    not be normalized. Returns (alpha, max reconstruction residual).
    """
    u_pair = np.asarray(u_pair, dtype=complex)
    x_pair = np.asarray(x_pair, dtype=complex)
    coeffs, *_ = np.linalg.lstsq(x_pair, u_pair, rcond=None)
    residual = float(np.abs(x_pair @ coeffs - u_pair).max())
    return coeffs.T, residual


def evd_svd_relation(
    spectrum: SkewSpectrum, strict: bool = False, gauge: str = SvdGauge.SYMPLECTIC.value
) -> List[PairRelation]:
    """Per-pair 2x2 coefficients expressing (u_{2k-1}, u_{2k}) in (x_{2k-1}, x_{2k}).

    Eigenvectors are taken with norm sqrt(2), so that b = Re x, Im x directly
    and |det alpha| = 1/2. Pairs whose frequency is shared with another pair
    have no unique relation: they are reported as degenerate, or raise
    DegeneratePairError when ``strict`` is set.

    In the ``swapped`` gauge the pair columns of U are exchanged as in
    ``skew_svd`` and the partner eigenvector is -i conj(x) instead of conj(x).
    """
    swapped = SvdGauge(gauge) is SvdGauge.SWAPPED
    degenerate = set()
    for start, stop in degenerate_clusters(spectrum.lambdas):
        if stop - start > 1:
            degenerate.update(range(start, stop))

    relations = []
    for j, lam in enumerate(spectrum.lambdas):
        if j in degenerate:
            if strict:
                raise DegeneratePairError(j, float(lam))
            logger.debug("Skipping EVD/SVD relation for degenerate pair %d (lambda=%.6g)", j, lam)
            relations.append(PairRelation(pair=j, lam=float(lam), alpha=None, residual=None, degenerate=True))
            continue
        cols = slice(2 * j, 2 * j + 2)
        x_pair = math.sqrt(2.0) * spectrum.eigvecs[:, cols]
        u_pair = spectrum.U[:, cols]
        if swapped:
            x_pair = np.column_stack([x_pair[:, 0], -1j * np.conj(x_pair[:, 0])])
            u_pair = u_pair[:, ::-1]
        alpha, residual = pair_coefficients(u_pair, x_pair)
        relations.append(PairRelation(pair=j, lam=float(lam), alpha=alpha, residual=residual))
    return relations
