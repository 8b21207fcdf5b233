from __future__ import annotations

from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class DTO(BaseModel):
    model_config = ConfigDict(extra="forbid", from_attributes=True)


# -------------------------
# Algebra files
# -------------------------


class PrimeFieldModel(DTO):
    GF: int = Field(ge=2)


class AlgebraFileModel(DTO):
    """On-disk and over-the-wire algebra table; omitted products are zero."""

    field: Union[Literal["Q"], PrimeFieldModel] = "Q"
    dim: int = Field(ge=0)
    basis: list[str]
    products: dict[str, dict[str, Union[str, int]]] = Field(default_factory=dict)


class AlgebraRequest(DTO):
    algebra: AlgebraFileModel
    right_leibniz: bool = False
    mod: Optional[int] = None
    engine: Literal["auto", "char0", "brute"] = "auto"
    budget: Optional[int] = Field(default=None, gt=0)
    timing: bool = True


# -------------------------
# Reports
# -------------------------


class SubspaceOut(DTO):
    dim: int
    basis: list[list[str]]
    span: list[str]


class InvariantOut(DTO):
    value: Optional[SubspaceOut] = None
    engine: str
    method: str = ""
    field: Optional[str] = None


class SeriesOut(DTO):
    derived_dims: list[int]
    lower_central_dims: list[int]
    solvable: bool
    nilpotent: bool
    nilpotency_class: Optional[int] = None
    derived_length: Optional[int] = None


class ValidationOut(DTO):
    ok: bool
    name: str = ""
    witness: Optional[dict[str, Any]] = None


class StructureReportOut(DTO):
    name: str
    field: str
    dim: int
    engine: str
    series: SeriesOut
    invariants: dict[str, InvariantOut]
    predicates: dict[str, Optional[bool]]
    caveats: list[str] = Field(default_factory=list)
    timing_ms: Optional[dict[str, float]] = None


class LatticeReportOut(DTO):
    name: str
    field: str
    dim: int
    subalgebra_count: int
    ideal_count: int
    maximal_subalgebras: list[SubspaceOut]
    maximal_ideals: list[SubspaceOut]
    minimal_ideals: list[SubspaceOut]
    invariants: dict[str, SubspaceOut]
    predicates: dict[str, bool]
    caveats: list[str] = Field(default_factory=list)


# -------------------------
# Catalog and verification
# -------------------------


class CatalogOut(DTO):
    family: str
    params: dict[str, str]
    algebra: AlgebraFileModel
    levi: Optional[dict[str, Any]] = None


class VerifyRequest(DTO):
    targets: list[str] = Field(default_factory=list)
    algebras: list[AlgebraFileModel] = Field(default_factory=list)
    budget: Optional[int] = Field(default=None, gt=0)


class ClaimRecordOut(DTO):
    target: str
    theorem: str
    claim: str
    status: Literal["pass", "fail", "undecidable", "finding"]
    detail: str = ""
    engine: str = ""
    evidence: dict[str, Any] = Field(default_factory=dict)


class VerifyResponse(DTO):
    theorem: str
    records: list[ClaimRecordOut]
    passed: bool
    counts: dict[str, int]
