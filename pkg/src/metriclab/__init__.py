"""metriclab: an interactive laboratory for binary-classification metrics."""

__version__ = "0.1.0"

from .curves import Curve, CurvePoint, mcc_f1_curve, pr_curve, roc_curve, threshold_grid, trapezoid_area
from .distributions import (
    DistributionParams,
    Histogram,
    ParameterError,
    histogram,
    sample_skew_normal,
    skew_normal_pdf,
    validate_params,
)
from .engine import EvaluationBundle, ScenarioConfig, evaluate_scenario, preset, preset_names
from .metrics import ConfusionCounts, MetricSuite, MetricValue, confusion_at_threshold, metric_suite

__all__ = [
    "__version__",
    "Curve",
    "CurvePoint",
    "mcc_f1_curve",
    "pr_curve",
    "roc_curve",
    "threshold_grid",
    "trapezoid_area",
    "DistributionParams",
    "Histogram",
    "ParameterError",
    "histogram",
    "sample_skew_normal",
    "skew_normal_pdf",
    "validate_params",
    "EvaluationBundle",
    "ScenarioConfig",
    "evaluate_scenario",
    "preset",
    "preset_names",
    "ConfusionCounts",
    "MetricSuite",
    "MetricValue",
    "confusion_at_threshold",
    "metric_suite",
]
