"""Wire format for the HTTP API: strict pydantic models and converters.

Requests reject unknown fields so client typos surface immediately.
Responses serialize every float with its shortest round-trip decimal
form, giving byte-stable bodies.  The one value JSON cannot carry is
the +inf sentinel threshold at a curve's first point; it crosses the
wire as ``null`` and converts back to +inf.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, field_validator

from ..curves import Curve, CurvePoint
from ..distributions import MAX_SAMPLES, MAX_SEED, DistributionParams, Histogram
from ..engine import EvaluationBundle, PdfTrace, ScenarioConfig
from ..metrics import ConfusionCounts, MetricSuite, MetricValue


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DistributionParamsModel(StrictModel):
    n: int
    loc: float
    scale: float
    shape: float

    @field_validator("loc", "scale", "shape")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("non-finite parameter")
        return v

    @field_validator("scale")
    @classmethod
    def _positive_scale(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("nonpositive scale")
        return v

    @field_validator("n")
    @classmethod
    def _n_in_range(cls, v: int) -> int:
        if not 1 <= v <= MAX_SAMPLES:
            raise ValueError("sample size out of range")
        return v


class EvaluateRequest(StrictModel):
    negative: DistributionParamsModel
    positive: DistributionParamsModel
    threshold: float
    seed: int

    @field_validator("threshold")
    @classmethod
    def _finite_threshold(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("non-finite parameter")
        return v

    @field_validator("seed")
    @classmethod
    def _seed_in_range(cls, v: int) -> int:
        if not 0 <= v <= MAX_SEED:
            raise ValueError("seed out of range")
        return v


class MetricValueModel(BaseModel):
    value: float
    defined: bool
    convention: str | None = None


class MetricSuiteModel(BaseModel):
    accuracy: MetricValueModel
    recall: MetricValueModel
    specificity: MetricValueModel
    precision: MetricValueModel
    npv: MetricValueModel
    f1: MetricValueModel
    mcc_raw: MetricValueModel
    mcc_norm: MetricValueModel


class ConfusionModel(BaseModel):
    tp: int
    fp: int
    tn: int
    fn: int


class HistogramModel(BaseModel):
    edges: list[float]
    counts: list[int]


class PdfTraceModel(BaseModel):
    x: list[float]
    y: list[float]


class CurvePointModel(BaseModel):
    threshold: float | None  # null == the +inf sentinel
    x: float
    y: float


class CurveModel(BaseModel):
    kind: str
    points: list[CurvePointModel]
    auc: float | None = None
    baseline: float | None = None
    area_above_baseline: float | None = None
    best_point: CurvePointModel | None = None


class EvaluateResponse(BaseModel):
    config: EvaluateRequest
    neg_histogram: HistogramModel
    pos_histogram: HistogramModel
    neg_pdf_trace: PdfTraceModel
    pos_pdf_trace: PdfTraceModel
    confusion: ConfusionModel
    metrics: MetricSuiteModel
    roc: CurveModel
    pr: CurveModel
    mccf1: CurveModel


class PresetModel(BaseModel):
    name: str
    config: EvaluateRequest


def config_from_request(req: EvaluateRequest) -> ScenarioConfig:
    def params(m: DistributionParamsModel) -> DistributionParams:
        return DistributionParams(n=m.n, loc=m.loc, scale=m.scale, shape=m.shape)

    return ScenarioConfig(
        negative=params(req.negative),
        positive=params(req.positive),
        threshold=req.threshold,
        seed=req.seed,
    )


def request_from_config(cfg: ScenarioConfig) -> EvaluateRequest:
    def params(p: DistributionParams) -> DistributionParamsModel:
        return DistributionParamsModel(n=p.n, loc=p.loc, scale=p.scale, shape=p.shape)

    return EvaluateRequest(
        negative=params(cfg.negative),
        positive=params(cfg.positive),
        threshold=cfg.threshold,
        seed=cfg.seed,
    )


def _point_model(p: CurvePoint) -> CurvePointModel:
    threshold = None if math.isinf(p.threshold) else p.threshold
    return CurvePointModel(threshold=threshold, x=p.x, y=p.y)


def _point_from_model(m: CurvePointModel) -> CurvePoint:
    threshold = math.inf if m.threshold is None else m.threshold
    return CurvePoint(threshold=threshold, x=m.x, y=m.y)


def _curve_model(c: Curve) -> CurveModel:
    return CurveModel(
        kind=c.kind,
        points=[_point_model(p) for p in c.points],
        auc=c.auc,
        baseline=c.baseline,
        area_above_baseline=c.area_above_baseline,
        best_point=_point_model(c.best_point) if c.best_point is not None else None,
    )


def _curve_from_model(m: CurveModel) -> Curve:
    return Curve(
        kind=m.kind,
        points=tuple(_point_from_model(p) for p in m.points),
        auc=m.auc,
        baseline=m.baseline,
        area_above_baseline=m.area_above_baseline,
        best_point=_point_from_model(m.best_point) if m.best_point is not None else None,
    )


def _metric_model(v: MetricValue) -> MetricValueModel:
    return MetricValueModel(value=v.value, defined=v.defined, convention=v.convention)


def _metric_from_model(m: MetricValueModel) -> MetricValue:
    return MetricValue(value=m.value, defined=m.defined, convention=m.convention)


_METRIC_NAMES = (
    "accuracy",
    "recall",
    "specificity",
    "precision",
    "npv",
    "f1",
    "mcc_raw",
    "mcc_norm",
)


def response_from_bundle(b: EvaluationBundle) -> EvaluateResponse:
    return EvaluateResponse(
        config=request_from_config(b.config),
        neg_histogram=HistogramModel(edges=list(b.neg_histogram.edges), counts=list(b.neg_histogram.counts)),
        pos_histogram=HistogramModel(edges=list(b.pos_histogram.edges), counts=list(b.pos_histogram.counts)),
        neg_pdf_trace=PdfTraceModel(x=list(b.neg_pdf_trace.x), y=list(b.neg_pdf_trace.y)),
        pos_pdf_trace=PdfTraceModel(x=list(b.pos_pdf_trace.x), y=list(b.pos_pdf_trace.y)),
        confusion=ConfusionModel(tp=b.confusion.tp, fp=b.confusion.fp, tn=b.confusion.tn, fn=b.confusion.fn),
        metrics=MetricSuiteModel(
            **{name: _metric_model(getattr(b.metrics, name)) for name in _METRIC_NAMES}
        ),
        roc=_curve_model(b.roc),
        pr=_curve_model(b.pr),
        mccf1=_curve_model(b.mccf1),
    )


def bundle_from_response(r: EvaluateResponse) -> EvaluationBundle:
    return EvaluationBundle(
        config=config_from_request(r.config),
        neg_histogram=Histogram(edges=tuple(r.neg_histogram.edges), counts=tuple(r.neg_histogram.counts)),
        pos_histogram=Histogram(edges=tuple(r.pos_histogram.edges), counts=tuple(r.pos_histogram.counts)),
        neg_pdf_trace=PdfTrace(x=tuple(r.neg_pdf_trace.x), y=tuple(r.neg_pdf_trace.y)),
        pos_pdf_trace=PdfTrace(x=tuple(r.pos_pdf_trace.x), y=tuple(r.pos_pdf_trace.y)),
        confusion=ConfusionCounts(tp=r.confusion.tp, fp=r.confusion.fp, tn=r.confusion.tn, fn=r.confusion.fn),
        metrics=MetricSuite(
            **{name: _metric_from_model(getattr(r.metrics, name)) for name in _METRIC_NAMES}
        ),
        roc=_curve_from_model(r.roc),
        pr=_curve_from_model(r.pr),
        mccf1=_curve_from_model(r.mccf1),
    )
