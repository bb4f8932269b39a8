"""Tests for entropy production and the flux trace identity."""

import math

import numpy as np
import pytest

from src.decomposition.split import u_frame
from src.entropy.production import (
    edge_fluxes,
    entropy_production,
    flux_sum_of_squares,
    near_equilibrium_ep,
    trace_identity,
)
from src.errors import IdentityViolationError, InfiniteEntropyProductionError
from src.markov.generator import perturbed_chain, random_chain, validate_generator
from src.markov.stationary import stationary_distribution
from src.spectral.skew import skew_spectrum


def _report(Q):
    pi = stationary_distribution(Q)
    return trace_identity(Q, pi, skew_spectrum(u_frame(Q, pi).flux_A))


def test_three_cycle_entropy(three_cycle):
    pi = stationary_distribution(three_cycle)
    ep, edges = entropy_production(three_cycle, pi)
    assert ep == pytest.approx(math.log(2.0), abs=1e-12)
    assert near_equilibrium_ep(three_cycle, pi) == pytest.approx(0.75, abs=1e-12)
    assert len(edges) == 3
    for edge in edges:
        assert abs(edge.flux) == pytest.approx(1 / 3, abs=1e-12)
        assert edge.contribution == pytest.approx(math.log(2.0) / 3, abs=1e-12)


def test_three_cycle_trace_identity(three_cycle):
    report = _report(three_cycle)
    assert report.trace_gram == pytest.approx(6.0, abs=1e-10)
    assert report.sum_a2 == pytest.approx(6.0, abs=1e-10)
    assert report.sum_lambda2 == pytest.approx(6.0, abs=1e-10)
    assert report.dynamics_trace == pytest.approx(1.5, abs=1e-10)
    assert report.near_eq_ratio == pytest.approx(math.log(2.0) / 0.75)
    assert report.max_relative_discrepancy <= 1e-9


def test_symmetric_cycle_has_no_entropy_production():
    Q = random_chain(4, 0, kind="cycle", a=1.5, b=1.5)
    pi = stationary_distribution(Q)
    ep, _ = entropy_production(Q, pi)
    assert ep == pytest.approx(0.0, abs=1e-18)


def test_reversible_chain(reversible_chain):
    pi = stationary_distribution(reversible_chain)
    ep, edges = entropy_production(reversible_chain, pi)
    assert ep <= 1e-18
    assert max(abs(e.flux) for e in edges) <= 1e-12
    assert near_equilibrium_ep(reversible_chain, pi) <= 1e-18
    assert _report(reversible_chain).max_relative_discrepancy <= 1e-9


@pytest.mark.parametrize("seed", range(5))
def test_trace_identity_on_random_chains(seed):
    n = 2 + seed * 2
    report = _report(random_chain(n, seed, kind="general"))
    assert report.max_relative_discrepancy <= 1e-9
    assert report.ep >= 0.0


def test_identity_violation_from_mismatched_spectrum(three_cycle):
    pi = stationary_distribution(three_cycle)
    wrong = skew_spectrum(2.0 * u_frame(three_cycle, pi).flux_A)
    with pytest.raises(IdentityViolationError) as excinfo:
        trace_identity(three_cycle, pi, wrong)
    assert excinfo.value.trace_gram == pytest.approx(24.0)
    assert excinfo.value.sum_a2 == pytest.approx(6.0)


def test_one_way_edge_gives_infinite_entropy_production():
    Q = random_chain(3, 0, kind="cycle", a=1.0, b=0.0)
    pi = stationary_distribution(Q)
    with pytest.raises(InfiniteEntropyProductionError):
        entropy_production(Q, pi)
    with pytest.raises(InfiniteEntropyProductionError):
        near_equilibrium_ep(Q, pi)


def test_missing_edges_in_both_directions_are_ignored():
    # a 4-ring: states 0 and 2 are not connected directly
    Q = random_chain(4, 0, kind="cycle", a=2.0, b=1.0)
    pi = stationary_distribution(Q)
    assert len(edge_fluxes(Q, pi)) == 4


def test_scale_covariance(general_chain):
    c = 3.0
    scaled = validate_generator(c * general_chain.rates)
    pi, pi_c = stationary_distribution(general_chain), stationary_distribution(scaled)
    np.testing.assert_allclose(pi_c.pi, pi.pi, atol=1e-12)
    ep, _ = entropy_production(general_chain, pi)
    ep_c, _ = entropy_production(scaled, pi_c)
    assert ep_c == pytest.approx(c * ep, rel=1e-9)
    assert near_equilibrium_ep(scaled, pi_c) == pytest.approx(
        c * near_equilibrium_ep(general_chain, pi), rel=1e-9
    )
    assert flux_sum_of_squares(scaled, pi_c) == pytest.approx(
        c**2 * flux_sum_of_squares(general_chain, pi), rel=1e-9
    )


def test_relabel_invariance(general_chain):
    perm = np.array([3, 0, 4, 1, 2])
    relabeled = validate_generator(general_chain.rates[np.ix_(perm, perm)])
    ep, _ = entropy_production(general_chain, stationary_distribution(general_chain))
    ep_p, _ = entropy_production(relabeled, stationary_distribution(relabeled))
    assert ep_p == pytest.approx(ep, rel=1e-9)


def test_near_equilibrium_limit():
    deviations = []
    for epsilon in (1e-1, 1e-2, 1e-3):
        Q = perturbed_chain(4, 3, epsilon)
        pi = stationary_distribution(Q)
        ep, _ = entropy_production(Q, pi)
        deviation = abs(ep / near_equilibrium_ep(Q, pi) - 1.0)
        assert deviation <= 10 * epsilon
        deviations.append(deviation)
    assert deviations == sorted(deviations, reverse=True)


@pytest.mark.parametrize("rate_scale", [1e-13, 1e-6, 1e6])
def test_three_cycle_entropy_scales_with_rates(rate_scale):
    Q = random_chain(3, 0, kind="cycle", rate_scale=rate_scale)
    pi = stationary_distribution(Q)
    np.testing.assert_allclose(pi.pi, [1 / 3] * 3, rtol=1e-12)
    ep, _ = entropy_production(Q, pi)
    assert ep == pytest.approx(rate_scale * math.log(2.0), rel=1e-9)
    report = _report(Q)
    assert report.trace_gram == pytest.approx(6.0 * rate_scale**2, rel=1e-9)
    assert report.max_relative_discrepancy <= 1e-9
