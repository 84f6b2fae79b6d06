from .app import DEFAULT_HOST, DEFAULT_PORT, create_app, default_ui_dir
from .schemas import (
    EvaluateRequest,
    EvaluateResponse,
    PresetModel,
    bundle_from_response,
    config_from_request,
    request_from_config,
    response_from_bundle,
)

__all__ = [
    "DEFAULT_HOST",
    "DEFAULT_PORT",
    "create_app",
    "default_ui_dir",
    "EvaluateRequest",
    "EvaluateResponse",
    "PresetModel",
    "bundle_from_response",
    "config_from_request",
    "request_from_config",
    "response_from_bundle",
]
