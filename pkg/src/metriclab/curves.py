"""Threshold sweeps: ROC, precision-recall, and MCC-F1 curves.

The sweep grid is one sentinel above every score (+inf, so nothing is
predicted positive) followed by each distinct score value in descending
order.  That visits every achievable confusion matrix exactly once and
ends with everything predicted positive, which makes the trapezoidal
ROC area agree exactly with rank-based pair counting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import ScoreSample

ROC = "roc"
PR = "pr"
MCCF1 = "mccf1"


@dataclass(frozen=True)
class CurvePoint:
    """One sweep point: the threshold that produced it and plot coords in [0,1]."""

    threshold: float
    x: float
    y: float


@dataclass(frozen=True)
class Curve:
    kind: str
    points: tuple[CurvePoint, ...]
    auc: float | None = None
    # PR only: prevalence line and the shaded area above it.
    baseline: float | None = None
    area_above_baseline: float | None = None
    # MCC-F1 only: the sweep point closest to perfect performance (1,1).
    best_point: CurvePoint | None = None


def threshold_grid(neg: ScoreSample, pos: ScoreSample) -> np.ndarray:
    """Strictly decreasing thresholds: +inf sentinel, then distinct scores."""
    neg = np.asarray(neg, dtype=float)
    pos = np.asarray(pos, dtype=float)
    if neg.size == 0 or pos.size == 0:
        raise ValueError("empty sample")
    distinct = np.unique(np.concatenate([neg, pos]))[::-1]
    return np.concatenate([[np.inf], distinct])


def trapezoid_area(points) -> float:
    """Trapezoidal area under a polyline given as an ordered (x, y) sequence."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValueError("insufficient points")
    x, y = pts[:, 0], pts[:, 1]
    dx = np.diff(x)
    if np.any(dx < 0):
        raise ValueError("unsorted abscissae")
    return float(np.sum(dx * (y[:-1] + y[1:]) / 2.0))


def _sweep_counts(
    neg: ScoreSample, pos: ScoreSample
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(grid, tp, fp) over the full threshold grid, via sorted lookups."""
    grid = threshold_grid(neg, pos)
    neg_sorted = np.sort(np.asarray(neg, dtype=float))
    pos_sorted = np.sort(np.asarray(pos, dtype=float))
    # count of scores >= t under the >= prediction rule
    tp = pos_sorted.size - np.searchsorted(pos_sorted, grid, side="left")
    fp = neg_sorted.size - np.searchsorted(neg_sorted, grid, side="left")
    return grid, tp, fp


def _points(grid: np.ndarray, x: np.ndarray, y: np.ndarray) -> tuple[CurvePoint, ...]:
    return tuple(
        CurvePoint(threshold=float(t), x=float(a), y=float(b))
        for t, a, b in zip(grid, x, y)
    )


def _precision_with_convention(tp: np.ndarray, fp: np.ndarray) -> np.ndarray:
    # tp+fp == 0 only at the sentinel; precision falls back to 1 there,
    # matching the metric-suite convention.
    predicted_pos = tp + fp
    return np.where(predicted_pos > 0, tp / np.maximum(predicted_pos, 1), 1.0)


def roc_curve(neg: ScoreSample, pos: ScoreSample) -> Curve:
    """False-positive rate vs true-positive rate, anchored at (0,0) and (1,1)."""
    grid, tp, fp = _sweep_counts(neg, pos)
    n_pos = np.asarray(pos).size
    n_neg = np.asarray(neg).size
    tpr = tp / n_pos
    fpr = fp / n_neg
    auc = trapezoid_area(np.column_stack([fpr, tpr]))
    return Curve(kind=ROC, points=_points(grid, fpr, tpr), auc=auc)


def pr_curve(neg: ScoreSample, pos: ScoreSample) -> Curve:
    """Recall vs precision, with the prevalence baseline and the area above it.

    The area above the baseline clips below-baseline segments to zero:
    it measures only how much of the curve rises above what an
    information-free classifier already achieves.
    """
    grid, tp, fp = _sweep_counts(neg, pos)
    n_pos = np.asarray(pos).size
    n_neg = np.asarray(neg).size
    recall = tp / n_pos
    precision = _precision_with_convention(tp, fp)
    baseline = n_pos / (n_pos + n_neg)
    auc = trapezoid_area(np.column_stack([recall, precision]))
    above = np.maximum(precision - baseline, 0.0)
    area_above = trapezoid_area(np.column_stack([recall, above]))
    return Curve(
        kind=PR,
        points=_points(grid, recall, precision),
        auc=auc,
        baseline=float(baseline),
        area_above_baseline=area_above,
    )


def mcc_f1_curve(neg: ScoreSample, pos: ScoreSample) -> Curve:
    """F1 vs unit-normalized MCC across the sweep, with the best point marked.

    The best point minimizes Euclidean distance to (1,1); ties break
    toward the larger threshold.
    """
    grid, tp, fp = _sweep_counts(neg, pos)
    n_pos = np.asarray(pos).size
    n_neg = np.asarray(neg).size
    tn = n_neg - fp
    fn = n_pos - tp

    recall = tp / n_pos
    precision = _precision_with_convention(tp, fp)
    pr_sum = precision + recall
    f1 = np.where(pr_sum > 0, 2.0 * precision * recall / np.maximum(pr_sum, 1e-300), 0.0)

    # Same factor order as metrics.mcc_denominator so scalar and swept
    # values round identically.
    den = (
        (tp + fp).astype(float)
        * (tp + fn).astype(float)
        * (tn + fp).astype(float)
        * (tn + fn).astype(float)
    )
    num = tp.astype(float) * tn.astype(float) - fp.astype(float) * fn.astype(float)
    mcc = np.where(den > 0, num / np.sqrt(np.maximum(den, 1e-300)), 0.0)
    mcc_norm = (np.clip(mcc, -1.0, 1.0) + 1.0) / 2.0

    dist_sq = (f1 - 1.0) ** 2 + (mcc_norm - 1.0) ** 2
    best = int(np.argmin(dist_sq))  # first minimum = largest threshold
    points = _points(grid, f1, mcc_norm)
    return Curve(kind=MCCF1, points=points, best_point=points[best])
