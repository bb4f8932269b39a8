"""Data models for skewmarkov."""

from .generator import (
    GeneratorMatrix,
    GeneratorSource,
    MarkovDensityMatrix,
    ProbabilityVector,
    StationaryDistribution,
)
from .decomposition import FrameTransform, Decomposition
from .spectrum import SkewEigensystem, SkewSpectrum, PairRelation, HamiltonianRep
from .trajectory import (
    FlowGenerator,
    Scheme,
    Trajectory,
    ObservableDrift,
    HarmonicCheck,
    ConservationReport,
)
from .entropy_report import EdgeFlux, EntropyReport
from .report import AnalysisReport, GeneratorFileModel

__all__ = [
    "GeneratorMatrix",
    "GeneratorSource",
    "ProbabilityVector",
    "StationaryDistribution",
    "MarkovDensityMatrix",
    "FrameTransform",
    "Decomposition",
    "SkewEigensystem",
    "SkewSpectrum",
    "PairRelation",
    "HamiltonianRep",
    "FlowGenerator",
    "Scheme",
    "Trajectory",
    "ObservableDrift",
    "HarmonicCheck",
    "ConservationReport",
    "EdgeFlux",
    "EntropyReport",
    "AnalysisReport",
    "GeneratorFileModel",
]
