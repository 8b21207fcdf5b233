"""Liveness and readiness endpoints."""

from __future__ import annotations

import asyncio
import time
from typing import Optional

from fastapi import APIRouter, Depends
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..algebra import LeibnizAlgebra, validate
from ..config import Settings, get_settings
from ..linalg import FieldSpec
from ..utils.logging import get_logger, log_health_check

logger = get_logger(__name__)

router = APIRouter(prefix="/health", tags=["health"])


class ServiceCheck(BaseModel):
    """Individual check result."""

    status: str  # "healthy" or "unhealthy"
    duration_ms: float
    error: Optional[str] = None


def _smoke_algebra() -> bool:
    # a 2-dimensional non-abelian table over GF(3) exercises the exact kernels end to end
    alg = LeibnizAlgebra.from_products(
        FieldSpec.prime(3), ["x", "n"], {("x", "x"): {"n": 1}, ("x", "n"): {"n": 1}}, checked=False
    )
    return validate(alg).ok


async def check_engine(timeout: float) -> ServiceCheck:
    """Run the identity validator on a known table within ``timeout`` seconds."""
    start_time = time.time()
    try:
        ok = await asyncio.wait_for(asyncio.to_thread(_smoke_algebra), timeout=timeout)
        duration_ms = (time.time() - start_time) * 1000
        status = "healthy" if ok else "unhealthy"
        error = None if ok else "validator rejected a known Leibniz table"
    except asyncio.TimeoutError:
        duration_ms = (time.time() - start_time) * 1000
        status, error = "unhealthy", f"engine check timeout after {timeout}s"
    log_health_check(service="engine", status=status, duration_ms=duration_ms, error=error)
    return ServiceCheck(status=status, duration_ms=duration_ms, error=error)


@router.get("/live")
async def liveness_check():
    """Confirms the application process is running."""
    return {"status": "alive", "timestamp": time.time()}


@router.get("/ready")
async def readiness_check(settings: Settings = Depends(get_settings)):
    """Confirms the exact-arithmetic engine answers; 503 otherwise."""
    check = await check_engine(settings.health_check_timeout)
    is_ready = check.status == "healthy"
    if not is_ready:
        logger.info(f"Engine check failed: {check.error}")
    return JSONResponse(
        status_code=200 if is_ready else 503,
        content={
            "status": "ready" if is_ready else "not_ready",
            "timestamp": time.time(),
            "checks": {"engine": check.model_dump()},
        },
    )
