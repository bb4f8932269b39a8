"""Tests for the analysis pipeline and its report."""

import json
import math

import numpy as np
import pytest

from src.analysis.analyzer import ChainAnalyzer, exit_code
from src.formats.generator_parser import GeneratorParser
from src.models.report import AnalysisReport

from .conftest import SQRT3, THREE_CYCLE, write_generator
from .test_markov import REDUCIBLE


def _analyze(q, verbose=False):
    content = json.dumps({"n": len(q), "q": np.asarray(q, dtype=float).tolist()})
    source = GeneratorParser().parse_string(content, fmt="json")
    return ChainAnalyzer(verbose=verbose).analyze_source(source)


def test_three_cycle_report():
    report = _analyze(THREE_CYCLE)
    assert report.status == "ok"
    assert exit_code(report) == 0
    assert report.violations == []
    assert report.input.labels == ["s1", "s2", "s3"]
    np.testing.assert_allclose(report.stationary.pi, [1 / 3] * 3, atol=1e-12)
    np.testing.assert_allclose(report.spectrum.lambdas, [SQRT3], atol=1e-10)
    assert report.spectrum.zero_multiplicity == 1
    assert report.entropy.ep == pytest.approx(math.log(2.0), abs=1e-12)
    assert report.entropy.trace_gram == pytest.approx(6.0, abs=1e-10)
    assert report.entropy.per_edge is None
    assert report.decomposition.S is None


def test_verbose_report_includes_matrices():
    report = _analyze(THREE_CYCLE, verbose=True)
    assert len(report.decomposition.flux_A) == 3
    assert len(report.spectrum.B) == 3
    assert len(report.entropy.per_edge) == 3


def test_reversible_chain_is_ok(reversible_chain):
    report = _analyze(reversible_chain.rates)
    assert report.status == "ok"
    assert report.entropy.ep <= 1e-18
    assert report.spectrum.lambdas == [] or max(report.spectrum.lambdas) <= 1e-9


def test_diagnostics_are_reported_without_violations(general_chain):
    report = _analyze(general_chain.rates)
    assert report.status == "ok"
    assert report.diagnostics.heisenberg.ratio == pytest.approx(2.0, rel=1e-9)
    assert not report.diagnostics.harmonic.passed


def test_reducible_chain_is_an_input_error():
    report = _analyze(REDUCIBLE)
    assert report.status == "error"
    assert report.error.type == "ReducibleError"
    assert report.error.module == "markov-core"
    assert report.stationary is None
    assert exit_code(report) == 1


def test_invalid_rates_are_input_errors():
    report = _analyze([[-1.0, -1.0], [1.0, 1.0]])
    assert report.status == "error"
    assert report.error.type == "NegativeRateError"


def test_analyze_file(tmp_path):
    path = write_generator(tmp_path / "cycle.json", THREE_CYCLE)
    stages = []
    report = ChainAnalyzer().analyze_file(path, progress_callback=stages.append)
    assert report.status == "ok"
    assert report.input.file == path
    assert stages == ["validate", "stationary", "decomposition", "spectrum", "entropy", "diagnostics"]


def test_missing_file_gives_error_report(tmp_path):
    report = ChainAnalyzer().analyze_file(str(tmp_path / "nope.json"))
    assert report.status == "error"
    assert report.error.type == "InputFormatError"
    assert exit_code(report) == 1


def test_exit_code_for_violations():
    assert exit_code(AnalysisReport(version="0", status="violation")) == 2


def test_trace_identity_mismatch_is_a_violation(monkeypatch):
    import src.analysis.analyzer as analyzer

    real = analyzer.skew_spectrum
    monkeypatch.setattr(analyzer, "skew_spectrum", lambda A: real(2.0 * np.asarray(A)))
    report = _analyze(THREE_CYCLE)
    assert report.status == "violation"
    assert report.error.type == "IdentityViolationError"
    assert report.error.module == "entropy"
    assert report.entropy is None
    assert exit_code(report) == 2
