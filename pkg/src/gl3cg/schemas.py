"""Request and response models for the HTTP service.

Values travel as exact rational strings ("2", "-3/2"); patterns as their
middle row plus bottom entry.  timings is null unless explicitly requested,
so cached and fresh responses compare equal.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

Top = tuple[int, int, int]
Label = tuple[int, int, int, int, int, int, int, int]
Method = Literal["formula", "oracle", "both"]


class PatternSpec(BaseModel):
    mid: tuple[int, int]
    bot: int


class ThreeJRequest(BaseModel):
    v: Top
    w: Top
    u: Top
    pv: PatternSpec
    pw: PatternSpec
    pu: PatternSpec
    label: Optional[Label] = None
    label_index: Optional[int] = None
    method: Method = "formula"
    convention: str = "recurrence"
    timings: bool = False


class ThreeJResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    value: str
    label: Label
    method: Method
    formula_value: Optional[str] = None
    oracle_value: Optional[str] = None
    agree: Optional[bool] = None
    timings: Optional[dict[str, float]] = None


class TableRequest(BaseModel):
    v: Top
    w: Top
    u: Optional[Top] = None
    label: Optional[Label] = None
    label_index: Optional[int] = None
    nonzero_only: bool = False
    method: Method = "formula"
    convention: str = "recurrence"
    timings: bool = False


class TableRow(BaseModel):
    v_pattern: tuple[int, int, int]
    w_pattern: tuple[int, int, int]
    u_pattern: tuple[int, int, int]
    label: Label
    value: str
    oracle_value: Optional[str] = None


class Constituent(BaseModel):
    u: Top
    multiplicity: int
    labels: list[Label]


class TableResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    rows: Optional[list[TableRow]] = None
    constituents: Optional[list[Constituent]] = None
    agree: Optional[bool] = None
    timings: Optional[dict[str, float]] = None


class VerifyRequest(BaseModel):
    suites: Optional[list[str]] = None
    max_weight: int = Field(default=2, ge=0, le=4)
    jobs: int = Field(default=1, ge=1, le=64)
    timings: bool = False


class CheckModel(BaseModel):
    suite: str
    name: str
    ok: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    passed: bool
    checks: list[CheckModel]
    report: str
    timings: Optional[dict[str, float]] = None


class HealthResponse(BaseModel):
    status: str = "ok"
    version: str
