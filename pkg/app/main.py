"""HTTP surface of the lab: the CLI operations as JSON endpoints."""

from __future__ import annotations

import time
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .config import Settings, get_settings
from .errors import LeibnizLabError
from .routers import algebras, catalog, health, verify
from .utils.logging import get_logger, log_request, setup_logging

API_VERSION = "0.1.0"
ROUTERS = (health.router, algebras.router, catalog.router, verify.router)

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(application: FastAPI):  # noqa: ARG001
    settings = get_settings()
    logger.bind(
        app_name=settings.app_name,
        environment=settings.environment,
        lattice_max_subspaces=settings.lattice_max_subspaces,
        oracle_primes=settings.oracle_prime_list,
    ).info("Application starting up")
    yield
    logger.info("Application shutting down")


def _register_error_handlers(application: FastAPI, settings: Settings) -> None:
    """Domain errors keep their own status; anything else is a 500 without internals."""

    @application.exception_handler(LeibnizLabError)
    async def domain_error(request: Request, exc: LeibnizLabError):
        logger.bind(
            method=request.method,
            path=str(request.url.path),
            error_type=exc.error_type,
            status_code=exc.status_code,
        ).warning(f"Request refused: {exc.message}")
        return JSONResponse(status_code=exc.status_code, content=exc.to_dict())

    @application.exception_handler(HTTPException)
    async def http_error(request: Request, exc: HTTPException):
        logger.bind(
            method=request.method, path=str(request.url.path), status_code=exc.status_code
        ).warning(f"HTTP exception occurred: {exc.detail}")
        return JSONResponse(
            status_code=exc.status_code,
            content={"detail": exc.detail, "type": "http_exception", "status_code": exc.status_code},
        )

    @application.exception_handler(Exception)
    async def unexpected_error(request: Request, exc: Exception):
        logger.bind(
            method=request.method,
            path=str(request.url.path),
            error_type=type(exc).__name__,
        ).opt(exception=exc).error("Unhandled exception occurred")
        detail = f"Internal server error: {exc}" if settings.debug else "Internal server error"
        return JSONResponse(status_code=500, content={"detail": detail, "type": "internal_server_error"})


def create_app() -> FastAPI:
    settings = get_settings()
    setup_logging(
        log_level=str(settings.log_level),
        json_format=settings.environment in ("staging", "prod"),
    )

    application = FastAPI(
        title=settings.app_name,
        description=(
            "Exact structure constants, radicals, Frattini and Jacobson ideals "
            "and theorem checks for finite-dimensional Leibniz algebras"
        ),
        version=API_VERSION,
        debug=settings.debug,
        lifespan=lifespan,
    )

    @application.middleware("http")
    async def log_requests(request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        duration_ms = (time.perf_counter() - started) * 1000
        log_request(request.method, str(request.url.path), response.status_code, duration_ms)
        response.headers["X-Response-Time"] = f"{duration_ms:.2f}ms"
        return response

    _register_error_handlers(application, settings)
    for router in ROUTERS:
        application.include_router(router)

    @application.get("/", tags=["root"])
    async def root():
        """Service name, version and one entry point per router."""
        return {
            "name": settings.app_name,
            "version": API_VERSION,
            "environment": settings.environment,
            "endpoints": {r.tags[0]: r.prefix for r in ROUTERS},
            "docs": "/docs",
        }

    logger.bind(routers=[r.prefix for r in ROUTERS]).info("FastAPI application created")
    return application


app = create_app()

if __name__ == "__main__":
    cfg = get_settings()
    uvicorn.run(
        "app.main:app",
        host=cfg.host,
        port=cfg.port,
        reload=cfg.debug,
        log_config=None,
        access_log=False,
    )
