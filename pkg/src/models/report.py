"""Pydantic schemas for generator files and analysis reports."""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator


class GeneratorFileModel(BaseModel):
    """JSON generator file: ``{"n", "labels", "q", "convention"}``."""

    n: int = Field(ge=1)
    labels: Optional[List[str]] = None
    q: List[List[float]]
    convention: Optional[Literal["column", "row"]] = None

    @field_validator("q")
    @classmethod
    def _rows_not_empty(cls, q: List[List[float]]) -> List[List[float]]:
        if not q:
            raise ValueError("q must have at least one row")
        return q

    @model_validator(mode="after")
    def _check_shape(self) -> "GeneratorFileModel":
        if len(self.q) != self.n:
            raise ValueError(f"q has {len(self.q)} rows but n = {self.n}")
        for row_index, row in enumerate(self.q):
            if len(row) != self.n:
                raise ValueError(f"row {row_index} of q has {len(row)} entries but n = {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"{len(self.labels)} labels given but n = {self.n}")
        return self


class InputInfo(BaseModel):
    file: str
    n: int
    convention: str
    sha256: str
    labels: List[str]


class StationaryInfo(BaseModel):
    pi: List[float]
    residual: float


class DecompositionInfo(BaseModel):
    symmetry: float
    skew: float
    reconstruction: float
    psd_margin: float
    kernel_S: float
    kernel_A: float
    flux_formula: float
    frame_consistency: float
    S: Optional[List[List[float]]] = None
    A: Optional[List[List[float]]] = None
    flux_A: Optional[List[List[float]]] = None


class SpectrumInfo(BaseModel):
    lambdas: List[float]
    zero_multiplicity: int
    residuals: Dict[str, float]
    B: Optional[List[List[float]]] = None
    H1: Optional[List[List[float]]] = None
    U: Optional[List[List[float]]] = None
    V: Optional[List[List[float]]] = None


class EdgeInfo(BaseModel):
    i: int
    j: int
    flux: float
    affinity: float


class EntropyInfo(BaseModel):
    ep: float
    ep_near_eq: float
    near_eq_ratio: Optional[float]
    trace_gram: float
    sum_a2: float
    sum_lambda2: float
    dynamics_trace: float
    max_relative_discrepancy: float
    per_edge: Optional[List[EdgeInfo]] = None


class HarmonicInfo(BaseModel):
    a_one_norm: float
    drift: float
    passed: bool


class HeisenbergInfo(BaseModel):
    hamiltonian: float
    trace_form: float
    ratio: Optional[float]


class DiagnosticsInfo(BaseModel):
    harmonic: HarmonicInfo
    heisenberg: HeisenbergInfo


class ViolationInfo(BaseModel):
    check: str
    value: float
    tolerance: float
    module: str


class ErrorInfo(BaseModel):
    type: str
    module: str
    message: str


class AnalysisReport(BaseModel):
    """Full analyze output; valid JSON for every status."""

    tool: str = "skewmarkov"
    version: str
    status: Literal["ok", "violation", "error"]
    input: Optional[InputInfo] = None
    stationary: Optional[StationaryInfo] = None
    decomposition: Optional[DecompositionInfo] = None
    spectrum: Optional[SpectrumInfo] = None
    entropy: Optional[EntropyInfo] = None
    diagnostics: Optional[DiagnosticsInfo] = None
    violations: List[ViolationInfo] = Field(default_factory=list)
    error: Optional[ErrorInfo] = None
