from __future__ import annotations

from typing import Optional

from fastapi import APIRouter, Query

from ..classify import Family, FamilySpec, build_entry, parse_field
from ..errors import BadParamsError
from ..schemas.algebra import CatalogOut
from ..services.algebra_io import algebra_to_model

router = APIRouter(prefix="/api/catalog", tags=["catalog"])


@router.get("", response_model=list[str])
def list_families():
    return [f.value for f in Family]


@router.get("/{family}", response_model=CatalogOut)
def catalog_entry(
    family: str,
    field: str = "Q",
    param: Optional[list[str]] = Query(None, description="k=v, repeatable"),
):
    params = {}
    for item in param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise BadParamsError(f"parameter {item!r} is not key=value")
        params[key.strip()] = value.strip()
    entry = build_entry(FamilySpec.of(family, **params), parse_field(field))
    levi = None
    if entry.levi is not None:
        levi = {
            "radical": entry.levi.radical.formatted(),
            "factor": entry.levi.factor.formatted(),
            "sl2_copies": entry.levi.sl2_copies,
            "direct": entry.levi.direct,
        }
    return CatalogOut(
        family=entry.spec.family.value,
        params={k: str(v) for k, v in entry.spec.params.items()},
        algebra=algebra_to_model(entry.algebra),
        levi=levi,
    )
