"""Pydantic records and enums shared across the package.

These models define the report contract printed by the CLI and written next
to sweep output (docs/OUTPUT_FORMATS.md). Numerical containers holding
matrices live with the code that produces them.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from tripurify.errors import DimensionError

SIMPLEX_TOL = 1e-12


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class Role(str, Enum):
    """Which copy a qubit belongs to."""

    SOURCE = "source"
    TARGET = "target"


class BranchClass(str, Enum):
    """Fate of the source copy after the target measurement."""

    SUCCESS = "Success"
    REJECT = "Reject"
    FAIL_BIPARTITE = "FailBipartite"


class WitnessPreset(str, Enum):
    """Shipped witness configurations."""

    PAPER_W = "paper-w"
    STANDARD_W = "standard-w"
    GHZ = "ghz"


class MixturePreset(str, Enum):
    """Two-state total mixtures fed to the by-product analysis."""

    GB1_GB4 = "gb1gb4"
    GB2_GB5 = "gb2gb5"
    GB3_GB6 = "gb3gb6"
    EQUAL_GB1_GB4 = "equal-gb1gb4"


# ---------------------------------------------------------------------------
# Inputs
# ---------------------------------------------------------------------------

class CoefficientVector(BaseModel):
    """Genuine-basis populations C_1..C_8 (three parties) or C_1..C_16 (four)."""

    model_config = ConfigDict(frozen=True)

    c: tuple[float, ...]

    @field_validator("c")
    @classmethod
    def _check_simplex(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        if len(value) not in (8, 16):
            raise ValueError(
                f"violated invariant: coefficient count (expected 8 or 16, got {len(value)})"
            )
        for i, ci in enumerate(value, start=1):
            if not np.isfinite(ci) or ci < 0.0:
                raise ValueError(f"violated invariant: entries >= 0 (C{i} = {ci!r})")
        total = float(sum(value))
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise ValueError(f"violated invariant: entries sum to 1 (sum = {total!r})")
        return value

    @classmethod
    def uniform(cls, size: int = 8) -> CoefficientVector:
        return cls(c=(1.0 / size,) * size)

    @classmethod
    def concise(cls, c1: float) -> CoefficientVector:
        """The twirled family: C_1 = c1, every other entry (1 - c1)/7."""
        if not 0.0 <= c1 <= 1.0:
            raise ValueError(f"violated invariant: c1 in [0, 1] (c1 = {c1!r})")
        rest = (1.0 - c1) / 7.0
        return cls(c=(c1,) + (rest,) * 7)

    @classmethod
    def from_sparse(cls, entries: dict[int, float], size: int = 8) -> CoefficientVector:
        """Build from {basis label: weight}, labels counted from 1."""
        values = [0.0] * size
        for label, weight in entries.items():
            if not 1 <= label <= size:
                raise DimensionError(f"basis label {label} outside 1..{size}")
            values[label - 1] = float(weight)
        return cls(c=tuple(values))

    @property
    def parties(self) -> int:
        return 3 if len(self.c) == 8 else 4

    def as_array(self) -> np.ndarray:
        return np.asarray(self.c, dtype=float)


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

class WFraction(BaseModel):
    """Largest overlap with GB^1..GB^6 and where it was found (1-based)."""

    value: float = Field(ge=-SIMPLEX_TOL, le=1.0 + SIMPLEX_TOL)
    argmax_index: int = Field(ge=1, le=6)


class BasisReport(BaseModel):
    """Orthonormality and completeness defects of a basis."""

    qubit_count: int
    size: int
    max_offdiag_overlap: float
    max_norm_error: float
    completeness_defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return max(
            self.max_offdiag_overlap, self.max_norm_error, self.completeness_defect
        ) < self.tol


class EigencheckEntry(BaseModel):
    """Rayleigh quotients and residuals of one state under J^2_123 and J^2_12."""

    label: str
    j123: float
    j12: float
    residual_123: float
    residual_12: float

    def is_simultaneous_eigenvector(self, tol: float) -> bool:
        return self.residual_123 < tol and self.residual_12 < tol


class BranchRecord(BaseModel):
    """One target-measurement outcome of a purification round."""

    outcome: str
    probability: float
    classification: BranchClass
    defined: bool
    gb1_population: Optional[float] = None
    w_fraction: Optional[float] = None
    purity: Optional[float] = None


class RoundReport(BaseModel):
    """Serializable summary of a purification round."""

    parties: int
    coefficients: tuple[float, ...]
    branches: list[BranchRecord]


class ConciseMapPoint(BaseModel):
    """One evaluation of the concise-family recurrence map."""

    f_in: float
    f_out: float
    p000: float
    yield_: float = Field(alias="yield")

    model_config = ConfigDict(frozen=True, populate_by_name=True)


class RecurrenceTrace(BaseModel):
    """Per-round history of the concise recurrence."""

    f0: float
    rounds: list[ConciseMapPoint]
    cumulative_yield: float

    @property
    def final_fraction(self) -> float:
        return self.rounds[-1].f_out if self.rounds else self.f0


class WitnessReading(BaseModel):
    """A witness preset evaluated on one state."""

    preset: WitnessPreset
    alpha: float
    target_label: str
    expectation: float
    threshold: Optional[float] = None
    detects: bool


class SweepMeta(BaseModel):
    """Sidecar written next to a concise-map curve table."""

    csv_path: str
    f_min: float
    f_max: float
    steps: int
    header: str
    fixed_points: list[float]
    identity_crossing: Optional[float] = None
    yield_argmax_f: float
    yield_max: float


class WitnessSummary(BaseModel):
    """Every witness preset on one concise state."""

    c1: float
    readings: list[WitnessReading]
    thresholds_disagree: bool
    note: str = ""


class CheckSummary(BaseModel):
    """Seeded comparison of the engine against the closed forms."""

    samples: int
    seed: int
    tol: float
    max_p000_error: float
    max_fw000_error: float
    oracle_failures: int
    max_reject_excess: float
    reject_failures: int

    @property
    def passed(self) -> bool:
        return self.oracle_failures == 0 and self.reject_failures == 0
