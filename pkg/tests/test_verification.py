"""Tests for the randomized verification suite and the invariant checker."""

import math
from dataclasses import replace

import numpy as np
import pytest

from src.decomposition.split import u_frame
from src.markov.stationary import stationary_distribution
from src.spectral.skew import skew_spectrum
from src.validation import (
    Fault,
    InvariantChecker,
    Measurement,
    VerificationSuite,
)


@pytest.mark.parametrize(
    "value, tolerance, error, expected",
    [
        (1e-12, 1e-10, None, 1e-2),
        (0.0, 0.0, None, 0.0),
        (1e-20, 0.0, None, math.inf),
        (math.nan, 1.0, None, math.inf),
        (0.0, 1.0, "NotSkewError: boom", math.inf),
    ],
)
def test_measurement_ratio(value, tolerance, error, expected):
    m = Measurement("suite", "check", value, tolerance, error)
    assert m.ratio == pytest.approx(expected)
    assert m.passed == (error is None and math.isfinite(value) and value <= tolerance)


def test_suite_argument_validation():
    with pytest.raises(ValueError):
        VerificationSuite(trials=0)
    with pytest.raises(ValueError):
        VerificationSuite(nmax=1)
    with pytest.raises(ValueError):
        VerificationSuite(fault="no-such-fault")


def test_small_run_passes_and_is_deterministic():
    calls = []
    first = VerificationSuite(trials=4, nmax=6, seed=3, workers=2).run(
        progress_callback=lambda done, total: calls.append((done, total))
    )
    assert first.all_passed, {n: r.failures for n, r in first.suites.items() if not r.ok}
    assert first.completed == 4
    assert calls == [(1, 4), (2, 4), (3, 4), (4, 4)]

    second = VerificationSuite(trials=4, nmax=6, seed=3, workers=1).run()
    for name, result in first.suites.items():
        other = second.suites[name]
        assert (result.trials, result.passed, result.checks) == (
            other.trials,
            other.passed,
            other.checks,
        )
        assert result.worst_value == other.worst_value


def test_every_suite_is_registered():
    suite = VerificationSuite(trials=1)
    assert suite.suite_names == [
        "generator",
        "stationary",
        "decomposition",
        "gradient",
        "canonical",
        "trace_identity",
        "entropy",
        "reversible_null",
        "conservation",
        "frame_equivalence",
        "schrodinger",
        "density",
        "near_equilibrium",
        "harmonic",
    ]


def test_flux_sign_fault_is_caught():
    stats = VerificationSuite(trials=6, nmax=8, seed=1, fault=Fault.FLUX_SIGN.value).run()
    assert not stats.all_passed
    assert stats.failed_trials > 0
    assert not stats.suites["canonical"].ok


def test_invariant_checker_accepts_clean_chain(general_chain):
    checker = InvariantChecker()
    pi = stationary_distribution(general_chain)
    decomposition = u_frame(general_chain, pi)
    assert checker.check_stationary(general_chain, pi) == (True, [])
    assert checker.check_decomposition(general_chain, pi, decomposition) == (True, [])
    assert checker.check_spectrum(skew_spectrum(decomposition.flux_A)) == (True, [])


def test_invariant_checker_reports_issues(general_chain):
    checker = InvariantChecker()
    pi = stationary_distribution(general_chain)
    clean = u_frame(general_chain, pi)
    S = np.array(clean.S)
    S[0, 1] += 1.0
    decomposition = replace(clean, S=S)
    ok, issues = checker.check_decomposition(general_chain, pi, decomposition)
    assert not ok
    names = {issue.check for issue in issues}
    assert {"symmetry", "reconstruction"} <= names
    assert all(issue.module == "decomposition" for issue in issues)
    assert "decomposition" in issues[0].message


def test_every_trial_covers_each_chain_family():
    stats = VerificationSuite(trials=3, nmax=7, seed=5, workers=1).run()
    assert stats.all_passed, {n: r.failures for n, r in stats.suites.items() if not r.ok}
    for name in ("canonical", "trace_identity", "conservation", "frame_equivalence"):
        assert stats.suites[name].trials == 3
    assert stats.suites["reversible_null"].trials == 3
    assert stats.suites["reversible_null"].checks == 3 * 6


def test_flow_suites_cover_fifty_general_chains():
    suite = VerificationSuite(trials=200)
    counts = {
        name: sum(applies(i) for i in range(suite.trials)) for name, applies, _ in suite._suites()
    }
    assert counts["trace_identity"] == counts["canonical"] == 200
    assert counts["reversible_null"] >= 100
    assert counts["conservation"] >= 50
    assert counts["frame_equivalence"] >= 50
