import math

import numpy as np
import pytest

from metriclab.distributions import DistributionParams, ParameterError, sample_skew_normal
from metriclab.engine import (
    HISTOGRAM_BINS,
    NEGATIVE_STREAM,
    PDF_TRACE_POINTS,
    POSITIVE_STREAM,
    ScenarioConfig,
    evaluate_scenario,
    preset,
    preset_names,
)


def config(threshold=1.0, seed=42, **overrides) -> ScenarioConfig:
    base = dict(
        negative=DistributionParams(n=200, loc=0.0, scale=1.0, shape=0.0),
        positive=DistributionParams(n=300, loc=2.0, scale=1.0, shape=0.0),
        threshold=threshold,
        seed=seed,
    )
    base.update(overrides)
    return ScenarioConfig(**base)


class TestPresets:
    def test_names(self):
        assert preset_names() == ["default", "imbalance-trap"]

    def test_imbalance_trap_definition(self):
        cfg = preset("imbalance-trap")
        assert cfg.negative.n == 100
        assert cfg.positive.n == 500
        assert cfg.threshold == -10.0
        assert cfg.seed == 42

    def test_default_definition(self):
        cfg = preset("default")
        assert cfg.negative.n == cfg.positive.n == 500
        assert cfg.positive.loc > cfg.negative.loc

    def test_unknown_name_lists_available(self):
        with pytest.raises(ValueError, match="unknown preset") as exc:
            preset("nonexistent")
        assert "default" in str(exc.value)
        assert "imbalance-trap" in str(exc.value)


class TestEvaluateScenario:
    def test_deterministic(self):
        assert evaluate_scenario(config()) == evaluate_scenario(config())

    def test_seed_changes_samples_not_structure(self):
        a = evaluate_scenario(config(seed=1))
        b = evaluate_scenario(config(seed=2))
        assert a != b
        for bundle in (a, b):
            assert bundle.confusion.tp + bundle.confusion.fn == 300
            assert bundle.confusion.tn + bundle.confusion.fp == 200
            assert len(bundle.neg_histogram.counts) == HISTOGRAM_BINS
            assert (bundle.roc.points[0].x, bundle.roc.points[0].y) == (0.0, 0.0)
            assert (bundle.roc.points[-1].x, bundle.roc.points[-1].y) == (1.0, 1.0)

    def test_imbalance_trap_bundle(self):
        bundle = evaluate_scenario(preset("imbalance-trap"))
        assert (bundle.confusion.tp, bundle.confusion.fp, bundle.confusion.tn, bundle.confusion.fn) == (500, 100, 0, 0)
        assert bundle.metrics.accuracy.value == 5 / 6
        assert bundle.metrics.mcc_norm.value == 0.5
        assert bundle.pr.baseline == pytest.approx(0.83333, abs=1e-5)

    def test_threshold_above_everything(self):
        bundle = evaluate_scenario(config(threshold=1e6))
        assert bundle.metrics.recall.value == 0.0
        assert bundle.metrics.specificity.value == 1.0
        assert not bundle.metrics.precision.defined

    def test_single_sampling_pass(self):
        # the bundle's confusion must describe the same draw the
        # histograms and curves saw
        cfg = config()
        bundle = evaluate_scenario(cfg)
        neg = sample_skew_normal(cfg.negative, cfg.seed, NEGATIVE_STREAM)
        pos = sample_skew_normal(cfg.positive, cfg.seed, POSITIVE_STREAM)
        assert bundle.confusion.tp == int(np.count_nonzero(pos >= cfg.threshold))
        assert bundle.confusion.fp == int(np.count_nonzero(neg >= cfg.threshold))
        assert sum(bundle.neg_histogram.counts) == neg.size
        assert min(bundle.neg_histogram.edges) == neg.min()

    def test_pdf_traces(self):
        cfg = config()
        bundle = evaluate_scenario(cfg)
        neg = sample_skew_normal(cfg.negative, cfg.seed, NEGATIVE_STREAM)
        pos = sample_skew_normal(cfg.positive, cfg.seed, POSITIVE_STREAM)
        lo = min(neg.min(), pos.min())
        hi = max(neg.max(), pos.max())
        pad = 0.1 * (hi - lo)
        for trace in (bundle.neg_pdf_trace, bundle.pos_pdf_trace):
            assert len(trace.x) == PDF_TRACE_POINTS
            assert len(trace.y) == PDF_TRACE_POINTS
            assert trace.x[0] == pytest.approx(lo - pad, rel=1e-12)
            assert trace.x[-1] == pytest.approx(hi + pad, rel=1e-12)
            assert all(v >= 0 for v in trace.y)
        assert bundle.neg_pdf_trace.x == bundle.pos_pdf_trace.x

    def test_validation_names_the_side(self):
        bad_neg = config(negative=DistributionParams(n=10, loc=0.0, scale=0.0, shape=0.0))
        with pytest.raises(ParameterError) as exc:
            evaluate_scenario(bad_neg)
        assert exc.value.field == "negative.scale"

        bad_pos = config(positive=DistributionParams(n=0, loc=0.0, scale=1.0, shape=0.0))
        with pytest.raises(ParameterError) as exc:
            evaluate_scenario(bad_pos)
        assert exc.value.field == "positive.n"

    def test_threshold_and_seed_validation(self):
        with pytest.raises(ParameterError) as exc:
            evaluate_scenario(config(threshold=math.inf))
        assert exc.value.field == "threshold"
        with pytest.raises(ParameterError) as exc:
            evaluate_scenario(config(seed=-1))
        assert exc.value.field == "seed"

    def test_curve_kinds(self):
        bundle = evaluate_scenario(config())
        assert bundle.roc.kind == "roc"
        assert bundle.pr.kind == "pr"
        assert bundle.mccf1.kind == "mccf1"
        assert bundle.mccf1.auc is None
        assert bundle.mccf1.best_point is not None
        assert bundle.pr.baseline is not None
