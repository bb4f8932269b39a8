"""Tests for the structured EVD, canonical form and canonical SVD of skew matrices."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.decomposition.split import u_frame
from src.errors import DegeneratePairError, NotSkewError
from src.markov.generator import random_chain
from src.markov.stationary import stationary_distribution
from src.spectral.relation import evd_svd_relation, pair_coefficients
from src.spectral.skew import (
    gram_sqrt,
    real_canonical_form,
    require_skew,
    skew_evd,
    skew_spectrum,
    skew_svd,
    zero_threshold,
)
from src.validation.invariant_checker import InvariantChecker

from .conftest import ROTATION, SQRT3
from .test_decomposition import FLUX_THREE_CYCLE


def _random_skew(n, seed):
    M = np.random.default_rng(seed).standard_normal((n, n))
    return M - M.T


def test_rotation_eigensystem():
    es = skew_evd(ROTATION)
    assert_allclose(es.lambdas, [1.0])
    assert_allclose(es.eigenvalues, [1j, -1j])
    assert_allclose(es.eigvecs[:, 0], np.array([1.0, 1j]) / np.sqrt(2.0), atol=1e-12)
    assert_allclose(es.eigvecs[:, 1], np.conj(es.eigvecs[:, 0]))


def test_three_cycle_eigenvalues():
    es = skew_evd(FLUX_THREE_CYCLE)
    assert_allclose(es.lambdas, [SQRT3], atol=1e-12)
    assert es.zero_multiplicity == 1
    assert_allclose(es.eigenvalues, [1j * SQRT3, -1j * SQRT3, 0.0], atol=1e-12)


def test_zero_matrix_is_all_kernel():
    sp = skew_spectrum(np.zeros((3, 3)))
    assert sp.n_pairs == 0
    assert sp.zero_multiplicity == 3
    assert_allclose(sp.sigma, 0.0)
    assert_allclose(sp.U, np.eye(3))
    assert_allclose(sp.V, np.eye(3))
    assert_allclose(gram_sqrt(np.zeros((3, 3))), 0.0)


def test_rotation_canonical_form_is_identity_basis():
    B, H1 = real_canonical_form(ROTATION)
    assert_allclose(B, np.eye(2), atol=1e-12)
    assert_allclose(H1, ROTATION, atol=1e-12)


def test_three_cycle_canonical_form():
    sp = skew_spectrum(FLUX_THREE_CYCLE)
    expected = [[0.0, SQRT3, 0.0], [-SQRT3, 0.0, 0.0], [0.0, 0.0, 0.0]]
    assert_allclose(sp.H1, expected, atol=1e-12)
    assert_allclose(sp.sigma, [SQRT3, SQRT3, 0.0], atol=1e-10)


def test_symplectic_gauge_pairs_columns():
    U, sigma, V = skew_svd(ROTATION)
    assert_allclose(sigma, [1.0, 1.0])
    assert_allclose(V[:, 0], U[:, 1], atol=1e-12)
    assert_allclose(V[:, 1], -U[:, 0], atol=1e-12)
    assert_allclose(U @ np.diag(sigma) @ V.T, ROTATION, atol=1e-12)


def test_swapped_gauge_reproduces_hand_factors():
    U, sigma, V = skew_svd(ROTATION, gauge="swapped")
    assert_allclose(U, [[0.0, 1.0], [1.0, 0.0]], atol=1e-12)
    assert_allclose(sigma, [1.0, 1.0])
    assert_allclose(V, [[-1.0, 0.0], [0.0, 1.0]], atol=1e-12)


@pytest.mark.parametrize("n, seed", [(3, 0), (4, 1), (5, 2), (8, 3), (9, 4)])
def test_random_skew_residuals(n, seed):
    A = _random_skew(n, seed)
    sp = skew_spectrum(A)
    for name, value in sp.residuals().items():
        assert value <= 1e-9 * sp.scale, name
    assert sp.zero_multiplicity == n % 2
    assert_allclose(np.sort(sp.sigma), np.sort(np.linalg.svd(A, compute_uv=False)), atol=1e-10)


def test_gram_sqrt_squares_to_gram():
    A = _random_skew(6, 5)
    G = gram_sqrt(A)
    assert_allclose(G, G.T)
    assert_allclose(G @ G, A.T @ A, atol=1e-10)
    assert_allclose(gram_sqrt(3.0 * ROTATION), 3.0 * np.eye(2), atol=1e-12)


def test_degenerate_pairs_are_canonicalized():
    A = np.zeros((5, 5))
    A[:2, :2] = 2.0 * ROTATION
    A[2:4, 2:4] = 2.0 * ROTATION
    Q0, _ = np.linalg.qr(np.random.default_rng(9).standard_normal((5, 5)))
    A = Q0 @ A @ Q0.T
    sp = skew_spectrum(A)
    assert_allclose(sp.lambdas, [2.0, 2.0], atol=1e-10)
    for name, value in sp.residuals().items():
        assert value <= 1e-9 * sp.scale, name

    relations = evd_svd_relation(sp)
    assert all(r.degenerate and r.alpha is None for r in relations)
    with pytest.raises(DegeneratePairError):
        evd_svd_relation(sp, strict=True)


def test_pair_coefficients_reproduce_hand_relation():
    u_pair = np.array([[0.0, 1.0], [1.0, 0.0]])
    x_pair = np.array([[1.0, -1j], [1j, -1.0]])
    alpha, residual = pair_coefficients(u_pair, x_pair)
    assert_allclose(alpha, [[-0.5j, -0.5], [0.5, 0.5j]], atol=1e-12)
    assert residual <= 1e-12


def test_relation_determinant_and_basis_covariance():
    A = _random_skew(5, 6)
    relations = evd_svd_relation(skew_spectrum(A))
    assert len(relations) == 2
    for r in relations:
        assert abs(r.determinant) == pytest.approx(0.5, abs=1e-9)
        assert r.residual <= 1e-9

    B0, _ = np.linalg.qr(np.random.default_rng(8).standard_normal((5, 5)))
    rotated = evd_svd_relation(skew_spectrum(B0 @ A @ B0.T))
    for r in rotated:
        assert r.residual <= 1e-9
    assert_allclose([r.lam for r in rotated], [r.lam for r in relations], atol=1e-10)


def test_not_skew_is_rejected():
    with pytest.raises(NotSkewError):
        require_skew([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(NotSkewError):
        skew_evd(np.zeros((2, 3)))


@pytest.mark.parametrize("rate_scale", [1e-13, 1e-6, 1.0, 1e6])
def test_spectrum_is_scale_covariant(rate_scale):
    Q = random_chain(3, 0, kind="cycle", rate_scale=rate_scale)
    flux_A = u_frame(Q, stationary_distribution(Q)).flux_A
    sp = skew_spectrum(flux_A)
    assert_allclose(sp.lambdas, [SQRT3 * rate_scale], rtol=1e-9)
    assert sp.zero_multiplicity == 1
    expected = rate_scale * np.array([[0.0, SQRT3, 0.0], [-SQRT3, 0.0, 0.0], [0.0, 0.0, 0.0]])
    assert_allclose(sp.H1, expected, atol=1e-12 * rate_scale)
    assert sp.scale == pytest.approx(2.0 * rate_scale)
    assert InvariantChecker().check_spectrum(sp) == (True, [])


def test_zero_threshold_is_relative():
    assert zero_threshold(1e-13) == pytest.approx(1e-22)
    assert zero_threshold(0.0) == pytest.approx(1e-12)


@pytest.mark.parametrize("rate_scale", [1e-13, 1.0, 1e6])
def test_reversible_chain_has_empty_spectrum_at_every_scale(rate_scale):
    Q = random_chain(6, 3, kind="reversible", rate_scale=rate_scale)
    sp = skew_spectrum(u_frame(Q, stationary_distribution(Q)).flux_A)
    assert sp.n_pairs == 0
    assert sp.zero_multiplicity == 6


def test_relation_gauges_on_rotation():
    sp = skew_spectrum(ROTATION)
    (symplectic,) = evd_svd_relation(sp)
    assert_allclose(symplectic.alpha, [[0.5, 0.5], [-0.5j, 0.5j]], atol=1e-12)
    (swapped,) = evd_svd_relation(sp, gauge="swapped")
    assert_allclose(swapped.alpha, [[-0.5j, -0.5], [0.5, 0.5j]], atol=1e-12)
    assert swapped.determinant == pytest.approx(0.5, abs=1e-12)


def test_swapped_relation_on_random_skew():
    relations = evd_svd_relation(skew_spectrum(_random_skew(6, 10)), gauge="swapped")
    assert len(relations) == 3
    for r in relations:
        assert r.residual <= 1e-9
        assert abs(r.determinant) == pytest.approx(0.5, abs=1e-9)
