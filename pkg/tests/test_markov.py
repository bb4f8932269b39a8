"""Tests for generator validation, stationary distributions and propagation."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.errors import (
    BadSizeError,
    ColumnSumNonzeroError,
    InvalidProbabilityError,
    NegativeRateError,
    NegativeTimeError,
    NonFiniteRateError,
    NotSquareError,
    ReducibleError,
    StepTooLargeError,
)
from src.markov.density import density_matrix_init, density_matrix_propagate, identity_density
from src.markov.generator import count_components, random_chain, validate_generator
from src.markov.propagation import clamp_probabilities, propagate, rk4_amplification
from src.markov.stationary import stationary_distribution
from src.models.generator import ProbabilityVector

from .conftest import THREE_CYCLE

REDUCIBLE = [
    [-1.0, 1.0, 0.0, 0.0],
    [1.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 1.0],
    [0.0, 0.0, 1.0, -1.0],
]


def test_row_convention_is_transposed():
    Q = validate_generator(np.array(THREE_CYCLE).T, convention="row")
    assert_allclose(Q.rates, THREE_CYCLE)
    assert Q.labels == ("s1", "s2", "s3")


@pytest.mark.parametrize(
    "raw, error",
    [
        ([[0.0, 1.0, 2.0]], NotSquareError),
        ([[-1.0, -1.0], [1.0, 1.0]], NegativeRateError),
        ([[-1.0, 2.0], [1.0, -1.0]], ColumnSumNonzeroError),
        ([[np.nan, 1.0], [1.0, -1.0]], NonFiniteRateError),
    ],
)
def test_invalid_generators(raw, error):
    with pytest.raises(error):
        validate_generator(raw)


def test_reducible_chain_is_flagged_not_raised():
    Q = validate_generator(REDUCIBLE)
    assert not Q.irreducible
    assert Q.n_components == 2
    with pytest.raises(ReducibleError):
        stationary_distribution(Q)


def test_one_way_ring_is_irreducible():
    ring = [[-1.0, 0.0, 1.0], [1.0, -1.0, 0.0], [0.0, 1.0, -1.0]]
    assert count_components(np.array(ring)) == 1


def test_two_state_stationary(two_state):
    pi = stationary_distribution(two_state)
    assert_allclose(pi.pi, [1 / 3, 2 / 3], atol=1e-12)
    assert pi.residual <= 1e-12


def test_three_cycle_stationary_is_uniform(three_cycle):
    pi = stationary_distribution(three_cycle)
    assert_allclose(pi.pi, np.full(3, 1 / 3), atol=1e-12)


def test_reversible_chain_satisfies_detailed_balance(reversible_chain):
    pi = stationary_distribution(reversible_chain).pi
    fluxes = reversible_chain.rates * pi[None, :]
    assert_allclose(fluxes, fluxes.T, atol=1e-12)


def test_random_chain_cycle_matches_hand_built_matrix():
    Q = random_chain(3, 0, kind="cycle", a=2.0, b=1.0)
    assert_allclose(Q.rates, THREE_CYCLE)


def test_random_chain_is_deterministic():
    first = random_chain(6, 42, kind="general")
    second = random_chain(6, 42, kind="general")
    assert np.array_equal(first.rates, second.rates)


def test_random_chain_rejects_single_state():
    with pytest.raises(BadSizeError):
        random_chain(1, 0)


def test_propagate_zero_time_returns_input(three_cycle):
    p0 = ProbabilityVector.point_mass(3, 0)
    assert propagate(three_cycle, p0, 0.0) is p0


def test_propagate_negative_time(three_cycle):
    with pytest.raises(NegativeTimeError):
        propagate(three_cycle, ProbabilityVector.uniform(3), -1.0)


def test_propagate_converges_to_stationary(three_cycle):
    p = propagate(three_cycle, ProbabilityVector.point_mass(3, 0), 50.0)
    assert_allclose(p.values, np.full(3, 1 / 3), atol=1e-12)


def test_propagate_semigroup_and_rk4(general_chain):
    p0 = ProbabilityVector.from_values(np.arange(1.0, 6.0) / 15.0)
    direct = propagate(general_chain, p0, 1.0)
    split = propagate(general_chain, propagate(general_chain, p0, 0.4), 0.6)
    stepped = propagate(general_chain, p0, 1.0, method="rk4", h=1e-3)
    assert_allclose(split.values, direct.values, atol=1e-12)
    assert_allclose(stepped.values, direct.values, atol=1e-7)
    assert direct.values.sum() == pytest.approx(1.0, abs=1e-12)


def test_unstable_rk4_step_is_rejected():
    stiff = validate_generator([[-100.0, 100.0], [100.0, -100.0]])
    p0 = ProbabilityVector.point_mass(2, 0)
    assert_allclose(propagate(stiff, p0, 0.1).values, [0.5, 0.5], atol=1e-8)
    assert rk4_amplification(stiff.rates, 0.1) > 1.0
    with pytest.raises(StepTooLargeError):
        propagate(stiff, p0, 0.1, method="rk4", h=0.1)
    # inside the stability interval the same chain integrates fine
    stepped = propagate(stiff, p0, 0.1, method="rk4", h=1e-3)
    assert_allclose(stepped.values, [0.5, 0.5], atol=1e-7)


def test_clamp_only_absorbs_roundoff():
    assert_allclose(clamp_probabilities(np.array([1.0, -1e-14])), [1.0, 0.0])
    with pytest.raises(InvalidProbabilityError):
        clamp_probabilities(np.array([1.5, -0.5]))


@pytest.mark.parametrize(
    "values",
    [[], [0.5, np.inf], [1.2, -0.2], [0.2, 0.2]],
)
def test_invalid_probability_vectors(values):
    with pytest.raises(InvalidProbabilityError):
        ProbabilityVector.from_values(values)


@pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
def test_density_matrix_stays_idempotent(general_chain, t):
    rho0 = density_matrix_init(ProbabilityVector.uniform(general_chain.n))
    rho = density_matrix_propagate(general_chain, rho0, t)
    assert rho.trace == pytest.approx(1.0, abs=1e-10)
    assert rho.idempotence_residual <= 1e-10


@pytest.mark.parametrize("t", [0.1, 1.0, 10.0])
def test_identity_density_gives_transition_matrix(general_chain, t):
    P = density_matrix_propagate(general_chain, identity_density(general_chain.n), t).rho
    assert_allclose(P.sum(axis=0), np.ones(general_chain.n), atol=1e-10)
    assert P.min() >= -1e-12


def test_density_negative_time(three_cycle):
    with pytest.raises(NegativeTimeError):
        density_matrix_propagate(three_cycle, identity_density(3), -0.5)
