"""Domain models shared across the engine, the verifier and the CLI."""
from __future__ import annotations

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


# ─────────────────────────────────────────────────────────────────────────────
# Enums
# ─────────────────────────────────────────────────────────────────────────────

class CornerKind(str, Enum):
    A = "A"
    B = "B"


class MarkMode(str, Enum):
    UNMARKED = "unmarked"
    ALL = "all"
    SINGLE = "single"


class CheckStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    ASYMPTOTIC_ONLY = "ASYMPTOTIC-ONLY"


class CheckKind(str, Enum):
    INTERNAL = "internal"
    PRINTED = "printed"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


# ─────────────────────────────────────────────────────────────────────────────
# Verification results
# ─────────────────────────────────────────────────────────────────────────────

class Discrepancy(BaseModel):
    index: list[int]
    part: Optional[Literal["value", "deriv"]] = None
    expected: str
    got: str


class CheckResult(BaseModel):
    formula_id: str
    title: str
    kind: CheckKind
    status: CheckStatus
    first_discrepancy: Optional[Discrepancy] = None
    ranges_checked: dict[str, str] = Field(default_factory=dict)
    diagnostics: dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _status_matches_witness(self) -> CheckResult:
        if (self.status is CheckStatus.MATCH) != (self.first_discrepancy is None):
            raise ValueError("status MATCH iff no first_discrepancy")
        return self

    @property
    def internal_failure(self) -> bool:
        return self.kind is CheckKind.INTERNAL and self.status is not CheckStatus.MATCH


class ReportHeader(BaseModel):
    engine: str = "bargraph-corners"
    version: str
    configuration: dict[str, int]
    classifier_policy: str


class ErrataReport(BaseModel):
    header: ReportHeader
    results: list[CheckResult] = Field(default_factory=list)

    @property
    def internal_failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.internal_failure]

    def by_id(self, formula_id: str) -> CheckResult:
        for result in self.results:
            if result.formula_id == formula_id:
                return result
        raise KeyError(formula_id)


# ─────────────────────────────────────────────────────────────────────────────
# Census rows
# ─────────────────────────────────────────────────────────────────────────────

class CensusRow(BaseModel):
    n: int
    k: int
    count: int
    total_A: int
    total_B: int
    per_ab_A: list[tuple[int, int, int]] = Field(default_factory=list)
    per_ab_B: list[tuple[int, int, int]] = Field(default_factory=list)
