from __future__ import annotations

from fastapi import APIRouter

from ..errors import BadParamsError
from ..lattice import LatticeBudget
from ..schemas.algebra import VerifyRequest, VerifyResponse
from ..services.algebra_io import model_to_algebra
from ..services.verification import (
    VerificationTarget,
    known_theorems,
    resolve_target,
    resolve_targets,
    run_verification,
    verification_response,
)

router = APIRouter(prefix="/api/verify", tags=["verify"])


@router.get("", response_model=list[str])
def list_theorems():
    return known_theorems()


@router.post("/{theorem}", response_model=VerifyResponse)
async def verify_theorem(theorem: str, request: VerifyRequest):
    targets: list[VerificationTarget] = []
    for text in request.targets:
        # server-side files are not reachable over HTTP
        if not text.startswith(("catalog:", "corpus:")):
            raise BadParamsError(f"target {text!r} must be catalog:... or corpus:...")
        targets.extend(resolve_target(text))
    for k, model in enumerate(request.algebras):
        label = f"algebras[{k}]"
        targets.append(VerificationTarget(label, model_to_algebra(model, name=label)))
    if not request.targets and not request.algebras:
        targets = resolve_targets([])
    budget = LatticeBudget(max_subspaces=request.budget) if request.budget else None
    records = await run_verification(theorem, targets, budget)
    return verification_response(theorem.lower(), records)
