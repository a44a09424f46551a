from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, computed_field


class LieKind(str, Enum):
    B = "B"
    C = "C"
    D = "D"


class SignProfile(str, Enum):
    all_nonneg = "all_nonneg"
    all_nonpos = "all_nonpos"
    mixed = "mixed"
    zero = "zero"


class Family(str, Enum):
    plain = "plain"
    one_prefixed = "one_prefixed"
    two_prefixed = "two_prefixed"
    suffix_one = "suffix_one"
    suffix_two = "suffix_two"
    rank_one = "rank_one"
    rank_two = "rank_two"
    rank_n = "rank_n"


class Side(str, Enum):
    v = "v"
    w = "w"


class Reason(str, Enum):
    necessary_fails = "necessary_fails"
    no_zero_sum_chain = "no_zero_sum_chain"
    empty_richardson = "empty_richardson"


class OutputFormat(str, Enum):
    json = "json"
    markdown = "markdown"
    csv = "csv"


class ExtremalEntryRecord(BaseModel):
    type: LieKind
    n: int
    r: int
    family: Family
    entries: list[int] = Field(default_factory=list)
    window: list[int]
    weight_root_basis: list[str]


class ClassificationRow(BaseModel):
    label: str
    v_window: list[int]
    v_weight: list[str]
    w_weight: list[str]
    w_window: list[int]


class PairRecord(BaseModel):
    type: LieKind
    n: int
    r: int
    v: list[int]
    w: list[int]


class VerdictRecord(BaseModel):
    pair: PairRecord
    richardson_nonempty: bool
    semistable: str  # "yes" | "no"
    reason: Optional[Reason] = None
    certificate: Optional[list[list[int]]] = None
    certificate_weights: list[list[str]] = Field(default_factory=list)
    derived_rule: bool = False


class CheckRequest(BaseModel):
    type: LieKind
    n: int = Field(ge=2)
    r: int = Field(ge=1)
    v: str = Field(description="window, e.g. '3,4,5,-1,2'")
    w: str = Field(description="window, e.g. '3,4,5,-2,1'")


class CheckResult(BaseModel):
    name: str
    passed: int = 0
    failed: int = 0
    witness: Optional[str] = None


class VerifyReport(BaseModel):
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)
