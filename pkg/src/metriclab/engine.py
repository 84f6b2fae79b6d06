"""One-scenario orchestration: samples, histograms, metrics, and all curves.

A single sampling pass under the scenario seed feeds every downstream
artifact, so the histogram, the confusion matrix, and all three curves
always describe the same data.  The negative class draws from stream 0
and the positive class from stream 1 of the one user-visible seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve, mcc_f1_curve, pr_curve, roc_curve
from .distributions import (
    MAX_SEED,
    DistributionParams,
    Histogram,
    ParameterError,
    histogram,
    sample_skew_normal,
    skew_normal_pdf,
    validate_params,
)
from .metrics import ConfusionCounts, MetricSuite, confusion_at_threshold, metric_suite

NEGATIVE_STREAM = 0
POSITIVE_STREAM = 1
HISTOGRAM_BINS = 40
PDF_TRACE_POINTS = 201
PDF_TRACE_PAD = 0.1  # fraction of the combined range added on each side


@dataclass(frozen=True)
class ScenarioConfig:
    """The full unit of user interaction: both classes, threshold, seed."""

    negative: DistributionParams
    positive: DistributionParams
    threshold: float
    seed: int


@dataclass(frozen=True)
class PdfTrace:
    """Smooth density overlay sampled on a shared abscissa grid."""

    x: tuple[float, ...]
    y: tuple[float, ...]


@dataclass(frozen=True)
class EvaluationBundle:
    config: ScenarioConfig
    neg_histogram: Histogram
    pos_histogram: Histogram
    neg_pdf_trace: PdfTrace
    pos_pdf_trace: PdfTrace
    confusion: ConfusionCounts
    metrics: MetricSuite
    roc: Curve
    pr: Curve
    mccf1: Curve


_PRESETS: dict[str, ScenarioConfig] = {
    # Two overlapping balanced classes; a sensible starting point.
    "default": ScenarioConfig(
        negative=DistributionParams(n=500, loc=0.0, scale=1.0, shape=0.0),
        positive=DistributionParams(n=500, loc=2.0, scale=1.0, shape=0.0),
        threshold=1.0,
        seed=42,
    ),
    # Imbalanced classes with the threshold far below every score, so
    # everything is predicted positive: accuracy looks fine while MCC
    # sits at chance.
    "imbalance-trap": ScenarioConfig(
        negative=DistributionParams(n=100, loc=0.0, scale=1.0, shape=0.0),
        positive=DistributionParams(n=500, loc=1.0, scale=1.0, shape=0.0),
        threshold=-10.0,
        seed=42,
    ),
}


def preset_names() -> list[str]:
    return list(_PRESETS)


def preset(name: str) -> ScenarioConfig:
    """Look up a named scenario; unknown names list what is available."""
    try:
        return _PRESETS[name]
    except KeyError:
        available = ", ".join(_PRESETS)
        raise ValueError(f"unknown preset {name!r}; available: {available}") from None


def _validate_config(cfg: ScenarioConfig) -> None:
    for prefix, params in (("negative", cfg.negative), ("positive", cfg.positive)):
        try:
            validate_params(params)
        except ParameterError as err:
            raise ParameterError(f"{prefix}.{err.field}", err.reason) from None
    if not math.isfinite(cfg.threshold):
        raise ParameterError("threshold", "non-finite parameter")
    if not 0 <= cfg.seed <= MAX_SEED:
        raise ParameterError("seed", "seed out of range")


def _pdf_abscissae(neg_scores: np.ndarray, pos_scores: np.ndarray) -> np.ndarray:
    lo = min(neg_scores.min(), pos_scores.min())
    hi = max(neg_scores.max(), pos_scores.max())
    pad = PDF_TRACE_PAD * (hi - lo) if hi > lo else 1.0
    return np.linspace(lo - pad, hi + pad, PDF_TRACE_POINTS)


def _trace(xs: np.ndarray, params: DistributionParams) -> PdfTrace:
    ys = skew_normal_pdf(xs, params)
    return PdfTrace(
        x=tuple(float(v) for v in xs),
        y=tuple(float(v) for v in ys),
    )


def evaluate_scenario(cfg: ScenarioConfig) -> EvaluationBundle:
    """Compute everything one scenario produces, deterministically."""
    _validate_config(cfg)
    neg = sample_skew_normal(cfg.negative, cfg.seed, NEGATIVE_STREAM)
    pos = sample_skew_normal(cfg.positive, cfg.seed, POSITIVE_STREAM)
    xs = _pdf_abscissae(neg, pos)
    confusion = confusion_at_threshold(neg, pos, cfg.threshold)
    return EvaluationBundle(
        config=cfg,
        neg_histogram=histogram(neg, HISTOGRAM_BINS),
        pos_histogram=histogram(pos, HISTOGRAM_BINS),
        neg_pdf_trace=_trace(xs, cfg.negative),
        pos_pdf_trace=_trace(xs, cfg.positive),
        confusion=confusion,
        metrics=metric_suite(confusion),
        roc=roc_curve(neg, pos),
        pr=pr_curve(neg, pos),
        mccf1=mcc_f1_curve(neg, pos),
    )
