import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import kstest, norm, skew

from metriclab.distributions import (
    DistributionParams,
    ParameterError,
    histogram,
    sample_skew_normal,
    skew_normal_pdf,
    validate_params,
)

from oracles import hand_binned_counts, mean_by_quadrature, pdf_quadrature

# First moment at loc=0, scale=1, shape=5, frozen from the quadrature
# oracle (mean_by_quadrature(0, 1, 5)); agrees with delta*sqrt(2/pi).
MEAN_SHAPE_5 = 0.7823901817554259


def params(n=100, loc=0.0, scale=1.0, shape=0.0) -> DistributionParams:
    return DistributionParams(n=n, loc=loc, scale=scale, shape=shape)


class TestValidateParams:
    def test_accepts_valid(self):
        validate_params(params(n=100, loc=0, scale=1, shape=0))

    def test_rejects_zero_scale(self):
        with pytest.raises(ParameterError, match="nonpositive scale") as exc:
            validate_params(params(scale=0.0))
        assert exc.value.field == "scale"

    def test_rejects_negative_scale(self):
        with pytest.raises(ParameterError, match="nonpositive scale"):
            validate_params(params(scale=-1.0))

    @pytest.mark.parametrize("n", [0, -5, 100_001])
    def test_rejects_n_out_of_range(self, n):
        with pytest.raises(ParameterError, match="sample size out of range") as exc:
            validate_params(params(n=n))
        assert exc.value.field == "n"

    @pytest.mark.parametrize("field,value", [("loc", math.nan), ("scale", math.inf), ("shape", -math.inf)])
    def test_rejects_non_finite(self, field, value):
        with pytest.raises(ParameterError, match="non-finite parameter") as exc:
            validate_params(params(**{field: value}))
        assert exc.value.field == field

    def test_extreme_finite_shape_accepted(self):
        validate_params(params(shape=1e6))


class TestSampler:
    def test_returns_n_values(self):
        s = sample_skew_normal(params(n=37), seed=1, stream_id=0)
        assert s.shape == (37,)
        assert np.all(np.isfinite(s))

    def test_deterministic_per_seed_and_stream(self):
        p = params(n=1000, loc=1.0, scale=2.0, shape=3.0)
        a = sample_skew_normal(p, seed=99, stream_id=0)
        b = sample_skew_normal(p, seed=99, stream_id=0)
        assert a.tobytes() == b.tobytes()

    def test_streams_are_distinct(self):
        p = params(n=1000)
        a = sample_skew_normal(p, seed=99, stream_id=0)
        b = sample_skew_normal(p, seed=99, stream_id=1)
        assert not np.array_equal(a, b)

    def test_seeds_are_distinct(self):
        p = params(n=1000)
        a = sample_skew_normal(p, seed=1, stream_id=0)
        b = sample_skew_normal(p, seed=2, stream_id=0)
        assert not np.array_equal(a, b)

    def test_zero_shape_mean_near_loc(self):
        # 3 standard errors at n=10000, scale=1
        s = sample_skew_normal(params(n=10_000, loc=3.0), seed=42, stream_id=0)
        assert abs(s.mean() - 3.0) <= 0.03

    def test_positive_shape_mean_matches_quadrature(self):
        s = sample_skew_normal(params(n=10_000, shape=5.0), seed=42, stream_id=0)
        assert abs(s.mean() - MEAN_SHAPE_5) <= 0.05

    def test_quadrature_constant_is_current(self):
        assert mean_by_quadrature(0.0, 1.0, 5.0) == pytest.approx(MEAN_SHAPE_5, abs=1e-9)

    def test_zero_shape_is_normal_ks(self):
        s = sample_skew_normal(params(n=10_000, loc=0.3, scale=1.7), seed=7, stream_id=0)
        assert kstest(s, lambda x: norm.cdf(x, 0.3, 1.7)).pvalue >= 0.01

    @pytest.mark.parametrize("shape", [5.0, -5.0])
    def test_skew_sign_follows_shape(self, shape):
        s = sample_skew_normal(params(n=10_000, shape=shape), seed=11, stream_id=0)
        assert math.copysign(1.0, skew(s)) == math.copysign(1.0, shape)

    def test_invalid_params_propagate(self):
        with pytest.raises(ParameterError, match="nonpositive scale"):
            sample_skew_normal(params(scale=0.0), seed=1, stream_id=0)


class TestPdf:
    def test_standard_normal_peak(self):
        assert skew_normal_pdf(1.5, params(loc=1.5)) == pytest.approx(1 / math.sqrt(2 * math.pi), abs=1e-12)

    @pytest.mark.parametrize(
        "loc,scale,shape",
        [(0.0, 1.0, 0.0), (0.0, 1.0, 5.0), (2.0, 3.0, -7.0), (-4.0, 0.25, 1.3)],
    )
    def test_integrates_to_one(self, loc, scale, shape):
        assert pdf_quadrature(loc, scale, shape) == pytest.approx(1.0, abs=1e-6)

    def test_nonnegative_everywhere(self):
        xs = np.linspace(-30, 30, 2001)
        assert np.all(skew_normal_pdf(xs, params(loc=1.0, scale=0.5, shape=-8.0)) >= 0)

    @pytest.mark.parametrize("d", [0.1, 0.7, 2.5])
    @pytest.mark.parametrize("shape", [0.5, 3.0, 9.0])
    def test_mirror_symmetry(self, d, shape):
        loc, scale = 1.25, 0.75
        left = skew_normal_pdf(loc - d, params(loc=loc, scale=scale, shape=-shape))
        right = skew_normal_pdf(loc + d, params(loc=loc, scale=scale, shape=shape))
        assert right == pytest.approx(left, rel=1e-12)

    def test_invalid_params_rejected(self):
        with pytest.raises(ParameterError):
            skew_normal_pdf(0.0, params(scale=-1.0))


class TestHistogram:
    def test_counts_sum(self):
        h = histogram(np.array([1.0, 2.0, 3.0, 4.0]), bin_count=2)
        assert sum(h.counts) == 4
        assert len(h.edges) == 3

    def test_degenerate_single_bin(self):
        h = histogram(np.full(17, 5.0), bin_count=12)
        assert h.edges == (4.5, 5.5)
        assert h.counts == (17,)

    def test_uniform_hand_binning(self):
        values = np.arange(10, dtype=float)
        h = histogram(values, bin_count=10)
        assert h.counts == tuple(hand_binned_counts(values, h.edges))
        assert h.counts == (1,) * 10

    def test_empty_sample(self):
        with pytest.raises(ValueError, match="empty sample"):
            histogram(np.array([]), bin_count=4)

    def test_bad_bin_count(self):
        with pytest.raises(ValueError):
            histogram(np.array([1.0]), bin_count=0)

    @given(
        values=st.lists(
            st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
            min_size=1,
            max_size=200,
        ),
        bin_count=st.integers(min_value=1, max_value=60),
    )
    @settings(max_examples=80)
    def test_every_value_in_exactly_one_bin(self, values, bin_count):
        h = histogram(np.array(values), bin_count)
        assert sum(h.counts) == len(values)
        assert list(h.counts) == hand_binned_counts(values, h.edges)
