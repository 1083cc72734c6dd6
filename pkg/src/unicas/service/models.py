"""Request/response schemas of the HTTP service.

All exact values travel as their canonical text forms ("p/q" rationals,
"6*k^2 + ..." polynomials); clients that need arithmetic re-parse them.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Suite = Literal["all", "casimir", "vogel", "deligne", "duality"]


class TableResponse(BaseModel):
    table_id: int
    title: str
    columns: list[str]
    rows: list[list[str]]


class VerifyRequest(BaseModel):
    suites: list[Suite] = Field(default_factory=lambda: ["all"])
    seed: int = 0
    profiles: int = Field(default=200, ge=1, le=10000)
    order: int = Field(default=6, ge=3, le=6)
    scope: Optional[list[str]] = None


class CheckResultModel(BaseModel):
    check_id: str
    subject: str
    status: Literal["pass", "fail", "skipped"]
    expected: str
    actual: str
    reason: str = ""


class VerifyResponse(BaseModel):
    version: str
    suites: list[str]
    seed: int
    profiles: int
    order: int
    summary: dict[str, int]
    passed: bool
    checks: list[CheckResultModel]
    tables: list[TableResponse]


class CasimirRequest(BaseModel):
    algebra: str
    kn: Optional[tuple[int, int]] = None
    weight: Optional[list[int]] = None
    diagram: Optional[list[int]] = None

    @model_validator(mode="after")
    def _exactly_one_input(self):
        given = [x is not None for x in (self.kn, self.weight, self.diagram)]
        if sum(given) != 1:
            raise ValueError("provide exactly one of kn, weight or diagram")
        return self


class CasimirResponse(BaseModel):
    algebra: str
    classical_name: str
    weight: str
    casimir_ck: str
    casimir_fundamental_trace: Optional[str] = None
    casimir_scaled: str
    universal_ck: Optional[str] = None
    matches_universal: Optional[bool] = None


class DimsRequest(BaseModel):
    algebra: Optional[str] = None
    point: Optional[list[str]] = None

    @model_validator(mode="after")
    def _exactly_one_input(self):
        if (self.algebra is None) == (self.point is None):
            raise ValueError("provide exactly one of algebra or point")
        if self.point is not None and len(self.point) != 3:
            raise ValueError("a point needs exactly three rational coordinates")
        return self


class DimsResponse(BaseModel):
    point: dict[str, str]
    dim_adjoint_universal: str
    dim_adjoint_weyl: Optional[str] = None
    dim_y2: dict[str, str]
    symmetric_square_dimension: str
    symmetric_square_sum: str
    s2_trace_residual: str
    lambda2_trace_residual: str


class DualityRequest(BaseModel):
    profiles: int = Field(default=200, ge=1, le=10000)
    seed: int = 0
    diagram: Optional[list[int]] = None
    order: int = Field(default=6, ge=3, le=6)
    experimental: bool = False


class DualityResponse(BaseModel):
    mode: Literal["profiles", "series"]
    all_zero: bool
    profiles_checked: Optional[int] = None
    failures: list[str] = Field(default_factory=list)
    residuals: Optional[dict[str, str]] = None


class SeriesRequest(BaseModel):
    family: Literal["so", "sp"]
    diagram: list[int]
    order: int = Field(default=6, ge=3, le=8)


class SeriesResponse(BaseModel):
    family: str
    diagram: str
    profile: str
    min_degree: int
    truncation_order: int
    raw_coefficients: dict[str, str]
    calibrated_coefficients: dict[str, str]
    c2_series: str
    c2_closed: str
    c2_ck: str


class HealthResponse(BaseModel):
    status: str
    version: str
