"""Confusion matrix at a threshold and the point metrics derived from it.

A score is predicted positive iff it is >= the threshold.  Metrics with
a degenerate denominator do not raise: they carry a documented fallback
value, are flagged ``defined=False``, and name the convention applied
so a UI can render them distinctly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import ScoreSample

# Convention tags attached to metrics whose denominator degenerated.
NO_PREDICTED_POSITIVES = "no-predicted-positives"
NO_PREDICTED_NEGATIVES = "no-predicted-negatives"
ZERO_PRECISION_RECALL = "zero-precision-recall"
ZERO_MCC_DENOMINATOR = "zero-denominator"


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class MetricValue:
    """A metric value plus whether its defining formula actually applied.

    When ``defined`` is False, ``value`` holds the documented fallback
    and ``convention`` names the rule that produced it.
    """

    value: float
    defined: bool = True
    convention: str | None = None


@dataclass(frozen=True)
class MetricSuite:
    accuracy: MetricValue
    recall: MetricValue
    specificity: MetricValue
    precision: MetricValue
    npv: MetricValue
    f1: MetricValue
    mcc_raw: MetricValue
    mcc_norm: MetricValue


def confusion_at_threshold(
    neg: ScoreSample, pos: ScoreSample, threshold: float
) -> ConfusionCounts:
    """Count TP/FP/TN/FN with the predicted-positive-iff-score>=threshold rule."""
    neg = np.asarray(neg, dtype=float)
    pos = np.asarray(pos, dtype=float)
    if neg.size == 0 or pos.size == 0:
        raise ValueError("empty sample")
    if not math.isfinite(threshold):
        raise ValueError("threshold must be finite")
    tp = int(np.count_nonzero(pos >= threshold))
    fp = int(np.count_nonzero(neg >= threshold))
    return ConfusionCounts(tp=tp, fp=fp, tn=int(neg.size) - fp, fn=int(pos.size) - tp)


def mcc_denominator(tp: int, fp: int, tn: int, fn: int) -> float:
    # Factors can reach 2e5 so the 4-way product overflows int64; go
    # through float64 (curve code multiplies in this same order so both
    # paths round identically).
    return float(tp + fp) * float(tp + fn) * float(tn + fp) * float(tn + fn)


def metric_suite(c: ConfusionCounts) -> MetricSuite:
    """Every point metric of the confusion matrix, with convention flags.

    Requires at least one member in each true class; a scenario with an
    empty class has no meaningful rates at all.
    """
    tp, fp, tn, fn = c.tp, c.fp, c.tn, c.fn
    if tp + fn < 1 or tn + fp < 1:
        raise ValueError("degenerate scenario: empty class")

    accuracy = MetricValue((tp + tn) / c.total)
    recall = MetricValue(tp / (tp + fn))
    specificity = MetricValue(tn / (tn + fp))

    if tp + fp > 0:
        precision = MetricValue(tp / (tp + fp))
    else:
        precision = MetricValue(1.0, defined=False, convention=NO_PREDICTED_POSITIVES)
    if tn + fn > 0:
        npv = MetricValue(tn / (tn + fn))
    else:
        npv = MetricValue(1.0, defined=False, convention=NO_PREDICTED_NEGATIVES)

    p, r = precision.value, recall.value
    if p + r > 0:
        f1 = MetricValue(2.0 * p * r / (p + r))
    else:
        f1 = MetricValue(0.0, defined=False, convention=ZERO_PRECISION_RECALL)

    den = mcc_denominator(tp, fp, tn, fn)
    if den > 0:
        raw = (float(tp) * float(tn) - float(fp) * float(fn)) / math.sqrt(den)
        mcc_raw = MetricValue(min(1.0, max(-1.0, raw)))
    else:
        mcc_raw = MetricValue(0.0, defined=False, convention=ZERO_MCC_DENOMINATOR)
    mcc_norm = MetricValue(
        (mcc_raw.value + 1.0) / 2.0, defined=mcc_raw.defined, convention=mcc_raw.convention
    )

    return MetricSuite(
        accuracy=accuracy,
        recall=recall,
        specificity=specificity,
        precision=precision,
        npv=npv,
        f1=f1,
        mcc_raw=mcc_raw,
        mcc_norm=mcc_norm,
    )
