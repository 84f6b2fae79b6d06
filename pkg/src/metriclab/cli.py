"""Terminal entry point: serve the dashboard, run one-shot evaluations, list presets.

Exit codes: 0 success, 2 usage error, 1 runtime error.  Standard output
carries only data; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import signal
import socket
import sys
import threading
import webbrowser
from pathlib import Path
from typing import Sequence

import uvicorn
from pydantic import ValidationError

from .engine import evaluate_scenario, preset, preset_names
from .service import (
    DEFAULT_HOST,
    DEFAULT_PORT,
    EvaluateRequest,
    config_from_request,
    create_app,
    default_ui_dir,
    request_from_config,
    response_from_bundle,
)

PORT_ENV_VAR = "ICM_PORT"

_METRIC_ORDER = (
    "accuracy",
    "recall",
    "specificity",
    "precision",
    "npv",
    "f1",
    "mcc_raw",
    "mcc_norm",
)


def _default_port() -> int:
    raw = os.environ.get(PORT_ENV_VAR)
    if raw is None:
        return DEFAULT_PORT
    try:
        return int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer {PORT_ENV_VAR}={raw!r}", file=sys.stderr)
        return DEFAULT_PORT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metriclab",
        description="Explore binary-classification metrics over synthetic score distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the local HTTP server (and UI, if built)")
    serve.add_argument("--host", default=DEFAULT_HOST, help="bind address (default %(default)s)")
    serve.add_argument(
        "--port",
        type=int,
        default=_default_port(),
        help=f"bind port; 0 picks an ephemeral port (default 5006, or ${PORT_ENV_VAR})",
    )
    serve.add_argument("--open", action="store_true", help="open the dashboard in a browser")
    serve.add_argument("--ui-dir", type=Path, default=None, help="directory with the built UI")
    serve.set_defaults(func=cmd_serve)

    evaluate = sub.add_parser("evaluate", help="evaluate one scenario and write the result")
    source = evaluate.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", type=Path, help="JSON scenario file (the request schema)")
    source.add_argument("--preset", help="named preset scenario")
    evaluate.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    evaluate.add_argument("--out", type=Path, default=None, help="output path (default: stdout for json)")
    evaluate.add_argument("--format", choices=("json", "csv"), default="json")
    evaluate.set_defaults(func=cmd_evaluate)

    presets = sub.add_parser("presets", help="print the preset scenarios as JSON")
    presets.set_defaults(func=cmd_presets)

    return parser


def cmd_serve(args: argparse.Namespace) -> int:
    ui_dir = args.ui_dir if args.ui_dir is not None else default_ui_dir()
    app = create_app(ui_dir=ui_dir)
    try:
        sock = socket.create_server((args.host, args.port))
    except OSError as err:
        print(f"error: cannot bind {args.host}:{args.port}: {err}", file=sys.stderr)
        return 1
    port = sock.getsockname()[1]
    url = f"http://{args.host}:{port}"
    print(f"serving at {url}", flush=True)
    if args.open:
        webbrowser.open(url)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    if threading.current_thread() is threading.main_thread():
        # uvicorn re-raises the signal that stopped it after a graceful
        # shutdown; a shutdown signal is a clean exit (code 0) here.
        signal.signal(signal.SIGTERM, lambda signum, frame: None)
    try:
        server.run(sockets=[sock])
    except KeyboardInterrupt:
        pass
    return 0


def _load_request(args: argparse.Namespace) -> EvaluateRequest:
    if args.preset is not None:
        req = request_from_config(preset(args.preset))
    else:
        req = EvaluateRequest.model_validate_json(args.config.read_text())
    if args.seed is not None:
        req = EvaluateRequest.model_validate({**req.model_dump(), "seed": args.seed})
    return req


def _format_validation_error(err: ValidationError) -> str:
    first = err.errors()[0]
    field = ".".join(str(part) for part in first["loc"])
    return f"{field}: {first['msg']}"


def _write_metrics_csv(path: Path, response) -> None:
    header: list[str] = []
    row: list[str] = []
    for name in _METRIC_ORDER:
        metric = getattr(response.metrics, name)
        header += [name, f"{name}_defined", f"{name}_convention"]
        row += [repr(metric.value), str(metric.defined).lower(), metric.convention or ""]
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerow(row)


def _write_curve_csv(path: Path, curve) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["threshold", "x", "y"])
        for point in curve.points:
            threshold = "inf" if point.threshold is None else repr(point.threshold)
            writer.writerow([threshold, repr(point.x), repr(point.y)])


def cmd_evaluate(args: argparse.Namespace) -> int:
    try:
        req = _load_request(args)
    except ValidationError as err:
        print(f"error: {_format_validation_error(err)}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    bundle = evaluate_scenario(config_from_request(req))
    response = response_from_bundle(bundle)

    if args.format == "json":
        body = response.model_dump_json()
        if args.out is None:
            print(body)
        else:
            args.out.write_text(body + "\n")
        return 0

    if args.out is None:
        print("error: --format csv requires --out", file=sys.stderr)
        return 2
    _write_metrics_csv(args.out, response)
    for kind, curve in (("roc", response.roc), ("pr", response.pr), ("mccf1", response.mccf1)):
        _write_curve_csv(args.out.with_suffix(f".{kind}.csv"), curve)
    return 0


def cmd_presets(args: argparse.Namespace) -> int:
    payload = [
        {"name": name, "config": request_from_config(preset(name)).model_dump()}
        for name in preset_names()
    ]
    print(json.dumps(payload, indent=2))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
