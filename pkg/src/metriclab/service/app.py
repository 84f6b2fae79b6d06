"""Stateless HTTP facade over the evaluation engine.

Endpoints (all under /api/v1): GET /health, GET /presets,
POST /evaluate.  When a built UI directory is available it is served at
the root path.  Handlers share no mutable state; every evaluation is a
pure function of the request body, so identical requests produce
byte-identical responses.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..distributions import ParameterError
from ..engine import evaluate_scenario, preset, preset_names
from .schemas import (
    EvaluateRequest,
    PresetModel,
    config_from_request,
    request_from_config,
    response_from_bundle,
)

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 5006

# Local tool: only browser pages served from this machine may call the API.
_LOCALHOST_ORIGINS = r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$"


def create_app(ui_dir: Path | str | None = None) -> FastAPI:
    app = FastAPI(title="metriclab", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=_LOCALHOST_ORIGINS,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        # Unparseable JSON is a malformed request (400), not a schema
        # violation (422).
        if any(e.get("type") == "json_invalid" for e in errors):
            return JSONResponse(
                status_code=400,
                content={"detail": [{"msg": e.get("msg", "invalid JSON"), "loc": list(e.get("loc", ()))} for e in errors]},
            )
        return JSONResponse(
            status_code=422,
            content={
                "detail": [
                    {
                        "loc": [str(part) for part in e.get("loc", ())],
                        "msg": e.get("msg", "invalid value"),
                        "type": e.get("type", "value_error"),
                    }
                    for e in errors
                ]
            },
        )

    @app.exception_handler(ParameterError)
    async def parameter_handler(request: Request, exc: ParameterError):
        return JSONResponse(
            status_code=422,
            content={"detail": [{"loc": exc.field.split("."), "msg": exc.reason, "type": "value_error"}]},
        )

    @app.get("/api/v1/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/api/v1/presets", response_model=list[PresetModel])
    def presets() -> list[PresetModel]:
        return [
            PresetModel(name=name, config=request_from_config(preset(name)))
            for name in preset_names()
        ]

    @app.post("/api/v1/evaluate")
    def evaluate(req: EvaluateRequest) -> Response:
        bundle = evaluate_scenario(config_from_request(req))
        body = response_from_bundle(bundle).model_dump_json()
        return Response(content=body, media_type="application/json")

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/")
        def index() -> dict:
            return {
                "service": "metriclab",
                "version": __version__,
                "endpoints": ["/api/v1/health", "/api/v1/presets", "/api/v1/evaluate"],
                "ui": "not built; see README for building the dashboard",
            }

    return app


def default_ui_dir() -> Path | None:
    """Packaged static UI directory, if a build has been installed."""
    candidate = Path(__file__).parent / "static"
    return candidate if (candidate / "index.html").is_file() else None
