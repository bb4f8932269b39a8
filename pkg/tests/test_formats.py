"""Tests for generator file parsing and the report, generator and trajectory writers."""

import hashlib
import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.dynamics.flow import flow
from src.errors import InputFormatError
from src.formats.generator_parser import GeneratorParser
from src.formats.generator_writer import GeneratorWriter
from src.formats.report_writer import ReportWriter, dumps, format_float
from src.formats.trajectory_writer import TrajectoryWriter
from src.models.report import AnalysisReport, StationaryInfo
from src.models.trajectory import FlowGenerator, Scheme

from .conftest import THREE_CYCLE, write_generator


@pytest.fixture
def parser():
    return GeneratorParser()


def test_parse_json_file(parser, tmp_path):
    path = write_generator(tmp_path / "cycle.json", THREE_CYCLE, labels=["a", "b", "c"])
    source = parser.parse(path)
    assert_allclose(source.raw, THREE_CYCLE)
    assert source.labels == ["a", "b", "c"]
    assert source.convention == "column"
    with open(path, "rb") as f:
        assert source.sha256 == hashlib.sha256(f.read()).hexdigest()


def test_convention_flag_overrides_file(parser, tmp_path):
    path = write_generator(tmp_path / "cycle.json", THREE_CYCLE, convention="column")
    assert parser.parse(path, convention="row").convention == "row"


def test_parse_csv_skips_comments(parser):
    content = "# uniform ring\n-3,1,2\n\n2,-3,1\n1,2,-3\n"
    source = parser.parse_string(content, fmt="csv")
    assert_allclose(source.raw, THREE_CYCLE)
    assert source.labels is None
    assert source.convention == "column"


@pytest.mark.parametrize(
    "content, fmt, line",
    [
        ('{"n": 2,\n "q": [[1, 2]\n', "json", 3),
        ("-1,1\n1,oops\n", "csv", 2),
        ("-1,1\n1,-1,0\n", "csv", 2),
    ],
)
def test_parse_errors_carry_line_numbers(parser, content, fmt, line):
    with pytest.raises(InputFormatError) as excinfo:
        parser.parse_string(content, fmt=fmt, path="bad")
    assert excinfo.value.line == line
    assert f"bad:{line}:" in str(excinfo.value)


@pytest.mark.parametrize(
    "data",
    [
        {"n": 3, "q": [[-1.0, 1.0], [1.0, -1.0]]},
        {"n": 2, "q": [[-1.0, 1.0], [1.0]]},
        {"n": 2, "q": [[-1.0, 1.0], [1.0, -1.0]], "convention": "diagonal"},
        {"n": 2, "labels": ["only"], "q": [[-1.0, 1.0], [1.0, -1.0]]},
    ],
)
def test_schema_errors(parser, data):
    with pytest.raises(InputFormatError):
        parser.parse_string(json.dumps(data), fmt="json")


def test_csv_must_be_square(parser):
    with pytest.raises(InputFormatError):
        parser.parse_string("-1,1,0\n1,-1,0\n", fmt="csv")


def test_missing_file_and_bad_suffix(parser, tmp_path):
    with pytest.raises(InputFormatError):
        parser.parse(str(tmp_path / "missing.json"))
    other = tmp_path / "chain.txt"
    other.write_text("-1,1\n1,-1\n")
    with pytest.raises(InputFormatError):
        parser.parse(str(other))


@pytest.mark.parametrize(
    "value, expected",
    [
        (1.0, "1.0"),
        (0.1, "0.10000000000000001"),
        (1e-20, "9.9999999999999995e-21"),
        (float("nan"), "null"),
        (float("inf"), "null"),
    ],
)
def test_format_float(value, expected):
    assert format_float(value, 17) == expected


def test_dumps_layout():
    text = dumps({"a": [1.0, 2], "b": {"c": None, "d": True}, "e": [[0.5]]}, digits=3)
    assert json.loads(text) == {"a": [1.0, 2], "b": {"c": None, "d": True}, "e": [[0.5]]}
    assert '"a": [1.0, 2]' in text


def test_report_writer_is_deterministic(tmp_path):
    report = AnalysisReport(
        version="0.1.0",
        status="ok",
        stationary=StationaryInfo(pi=[1 / 3, 1 / 3, 1 / 3], residual=0.0),
    )
    writer = ReportWriter()
    text = writer.to_string(report)
    assert text == writer.to_string(report)
    assert "0.33333333333333331" in text
    assert '"error"' not in text

    path = tmp_path / "report.json"
    writer.write(report, str(path))
    assert path.read_text(encoding="utf-8") == text + "\n"


def test_generator_writer_output_parses_back(three_cycle, parser, tmp_path):
    path = tmp_path / "out" / "cycle.json"
    GeneratorWriter().write(three_cycle, str(path))
    source = parser.parse(str(path))
    assert_allclose(source.raw, THREE_CYCLE)
    assert source.labels == ["s1", "s2", "s3"]


def test_trajectory_writer(cycle_decomposition):
    traj = flow(
        cycle_decomposition,
        FlowGenerator.SA,
        cycle_decomposition.stationary_amplitude,
        1.0,
        h=0.3,
        scheme=Scheme.EXPM,
        observables={"identity": np.eye(3)},
    )
    writer = TrajectoryWriter(digits=6)
    lines = writer.to_string(traj, frame="p", transform=cycle_decomposition.frame).splitlines()
    assert lines[0] == "time,p_1,p_2,p_3,H,norm2,Phi,identity"
    assert len(lines) == 1 + len(traj)
    first = [float(v) for v in lines[1].split(",")]
    assert_allclose(first[1:4], np.full(3, 1 / 3), rtol=1e-5)

    thinned = writer.to_string(traj, stride=3).splitlines()
    # rows at t = 0, 0.9 and the final t = 1.0
    assert_allclose([float(row.split(",")[0]) for row in thinned[1:]], [0.0, 0.9, 1.0])


def test_trajectory_writer_rejects_bad_arguments(cycle_decomposition):
    traj = flow(cycle_decomposition, FlowGenerator.A, np.ones(3), 1.0, h=0.5, scheme=Scheme.EXPM)
    writer = TrajectoryWriter()
    with pytest.raises(ValueError):
        writer.to_string(traj, frame="p")
    with pytest.raises(ValueError):
        writer.to_string(traj, stride=0)
