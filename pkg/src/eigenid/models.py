"""Data models for eigenid reports and files."""

from datetime import datetime
from enum import Enum
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class Provenance(str, Enum):
    """How a table of (n-1)-spectra was produced."""
    MINOR_DELETION = "minor-deletion"
    PROJECTION_DEFLATION = "projection-deflation"
    SUBSPACE_RESTRICTION = "subspace-restriction"


class DeflationMode(str, Enum):
    """How the artificial zero eigenvalue of PAP is removed."""
    RESTRICTION = "restriction"
    DROP_SMALLEST = "drop-smallest"

    @property
    def provenance(self) -> Provenance:
        if self is DeflationMode.RESTRICTION:
            return Provenance.SUBSPACE_RESTRICTION
        return Provenance.PROJECTION_DEFLATION


class ExperimentName(str, Enum):
    """Verification experiments."""
    MINORS = "minors"
    IDENTITY_BASIS = "identity-basis"
    ARBITRARY_BASIS = "arbitrary-basis"
    ALL = "all"

    @classmethod
    def expand(cls, names: List["ExperimentName"]) -> List["ExperimentName"]:
        """Replace ALL with every concrete experiment, keeping order and uniqueness."""
        expanded: List[ExperimentName] = []
        for name in names:
            members = [m for m in cls if m is not cls.ALL] if name is cls.ALL else [name]
            for member in members:
                if member not in expanded:
                    expanded.append(member)
        return expanded


class MatrixFormat(str, Enum):
    """Matrix file formats."""
    JSON = "json"
    MATRIX_MARKET = "mm"


class FailureReason(str, Enum):
    """Why an experiment did not pass."""
    MISMATCH = "mismatch"
    DEGENERATE = "degenerate"


class ExperimentReport(BaseModel):
    """Outcome of one verification experiment."""
    experiment: ExperimentName = Field(..., description="Experiment name")
    n: int = Field(..., ge=1, description="Matrix dimension")
    seed: Optional[int] = Field(None, description="Generator seed, if the matrix was generated")
    mode: DeflationMode = Field(DeflationMode.RESTRICTION, description="Deflation mode")
    max_abs_error: Optional[float] = Field(
        None, description="Max elementwise error against the direct reference"
    )
    tolerance: float = Field(..., gt=0, description="Pass threshold")
    passed: bool = Field(..., description="max_abs_error < tolerance")
    reason: Optional[FailureReason] = Field(None, description="Failure reason")
    detail: Optional[str] = Field(None, description="Human-readable failure detail")
    wall_time: float = Field(..., ge=0, description="Wall time in seconds")
    timestamp: datetime = Field(default_factory=datetime.utcnow)

    @model_validator(mode="after")
    def _passed_matches_error(self) -> "ExperimentReport":
        expected = self.max_abs_error is not None and self.max_abs_error < self.tolerance
        if self.passed != expected:
            raise ValueError("passed must equal (max_abs_error < tolerance)")
        return self


class ReportFile(BaseModel):
    """A batch of experiment reports."""
    reports: List[ExperimentReport] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def all_passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def any_degenerate(self) -> bool:
        return any(report.reason is FailureReason.DEGENERATE for report in self.reports)


MatrixEntry = Union[float, Tuple[float, float]]


class MatrixFile(BaseModel):
    """JSON matrix document: real entries are numbers, complex entries [re, im]."""

    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., ge=1, description="Matrix dimension")
    is_complex: bool = Field(..., alias="complex", description="Entries are [re, im] pairs")
    entries: List[List[MatrixEntry]] = Field(..., description="Row-major n x n entries")

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixFile":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries must be a {self.n}x{self.n} array")
        for row in self.entries:
            for entry in row:
                if isinstance(entry, tuple) != self.is_complex:
                    kind = "[re, im] pairs" if self.is_complex else "plain numbers"
                    raise ValueError(f"entries must all be {kind}")
        return self


class RecoveryReport(BaseModel):
    """Result of recovering a constraint vector from target stationary values."""
    n: int = Field(..., ge=2)
    targets: List[float] = Field(..., description="Target stationary values, ascending")
    weights: List[float] = Field(..., description="Squared eigenbasis coefficients d_j^2")
    signs: List[MatrixEntry] = Field(..., description="Unit phase per coefficient")
    constraint: List[MatrixEntry] = Field(..., description="Recovered unit constraint vector")
    residual: float = Field(..., ge=0, description="max|stationary values - targets|")
    tolerance: float = Field(..., gt=0)

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance
