"""File formats: generator files, analysis reports, trajectory CSV."""

from .generator_parser import GeneratorParser
from .generator_writer import GeneratorWriter
from .report_writer import ReportWriter, dumps, format_float
from .trajectory_writer import TrajectoryWriter

__all__ = [
    "GeneratorParser",
    "GeneratorWriter",
    "ReportWriter",
    "TrajectoryWriter",
    "dumps",
    "format_float",
]
