from __future__ import annotations

from typing import Optional

from fastapi import APIRouter

from ..algebra import LeibnizAlgebra
from ..lattice import LatticeBudget
from ..schemas.algebra import (
    AlgebraRequest,
    LatticeReportOut,
    StructureReportOut,
    ValidationOut,
)
from ..services.algebra_io import model_to_algebra, reduce_mod
from ..services.reports import build_lattice_report, build_structure_report, validation_out

router = APIRouter(prefix="/api/algebras", tags=["algebras"])


def _algebra(request: AlgebraRequest, checked: bool = True) -> LeibnizAlgebra:
    alg = model_to_algebra(
        request.algebra, name="request", right_leibniz=request.right_leibniz, checked=checked
    )
    if request.mod is not None:
        alg = reduce_mod(alg, request.mod, checked=checked)
    return alg


def _budget(request: AlgebraRequest) -> Optional[LatticeBudget]:
    return LatticeBudget(max_subspaces=request.budget) if request.budget else None


@router.post("/validate", response_model=ValidationOut)
def validate_algebra(request: AlgebraRequest):
    return validation_out(_algebra(request, checked=False))


@router.post(
    "/report", response_model=StructureReportOut, response_model_exclude_none=True
)
def structure_report(request: AlgebraRequest):
    return build_structure_report(
        _algebra(request),
        engine=request.engine,
        budget=_budget(request),
        timing=request.timing,
    )


@router.post("/lattice", response_model=LatticeReportOut)
def lattice_report(request: AlgebraRequest):
    return build_lattice_report(_algebra(request), _budget(request))
