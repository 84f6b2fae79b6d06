"""Synthetic class-score distributions.

Each class's scores are drawn from a three-parameter skewed family
(location, scale, shape).  The sliders map directly onto location /
scale / shape, *not* onto the distribution's true mean, standard
deviation, and skewness: shape 0 recovers a plain normal centered at
``loc`` with standard deviation ``scale``, while nonzero shape pulls
mass toward one tail (and shifts the true mean away from ``loc``).
The score axis is unbounded; nothing here assumes probabilities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm

MAX_SAMPLES = 100_000
MAX_SEED = 2**64 - 1

# A sample of scores is a plain float64 array whose length equals the
# generating DistributionParams.n.
ScoreSample = np.ndarray


class ParameterError(ValueError):
    """A distribution or scenario parameter violated its invariant.

    Carries the offending field name so callers (engine, service, CLI)
    can point at the exact input that failed.
    """

    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason


@dataclass(frozen=True)
class DistributionParams:
    """One class's score-distribution controls: count, location, scale, shape."""

    n: int
    loc: float
    scale: float
    shape: float


@dataclass(frozen=True)
class Histogram:
    """Uniform-width histogram: ``len(edges) == len(counts) + 1``."""

    edges: tuple[float, ...]
    counts: tuple[int, ...]


def validate_params(p: DistributionParams) -> None:
    """Raise ParameterError unless ``p`` satisfies every invariant.

    Checks, in order: loc/scale/shape finite, scale > 0,
    1 <= n <= MAX_SAMPLES.
    """
    for field in ("loc", "scale", "shape"):
        if not math.isfinite(getattr(p, field)):
            raise ParameterError(field, "non-finite parameter")
    if p.scale <= 0:
        raise ParameterError("scale", "nonpositive scale")
    if not 1 <= p.n <= MAX_SAMPLES:
        raise ParameterError("n", "sample size out of range")


def sample_skew_normal(p: DistributionParams, seed: int, stream_id: int) -> ScoreSample:
    """Draw ``p.n`` scores from the skew-normal law, deterministically.

    Uses the two-normal construction: with delta = shape/sqrt(1+shape^2)
    and independent standard normals u0, u1,

        z = delta*|u0| + sqrt(1-delta^2)*u1,   score = loc + scale*z.

    It is exact (no rejection step) and reduces to a plain normal at
    shape 0.  Identical (p, seed, stream_id) yield bit-identical output;
    distinct stream_ids give independent streams under one seed.
    """
    validate_params(p)
    root = np.random.SeedSequence(entropy=seed, spawn_key=(stream_id,))
    rng = np.random.default_rng(root)
    delta = p.shape / math.sqrt(1.0 + p.shape * p.shape)
    u0 = rng.standard_normal(p.n)
    u1 = rng.standard_normal(p.n)
    z = delta * np.abs(u0) + math.sqrt(1.0 - delta * delta) * u1
    return p.loc + p.scale * z


def skew_normal_pdf(x, p: DistributionParams):
    """Skew-normal density at ``x`` (scalar or array).

    (2/scale) * phi((x-loc)/scale) * Phi(shape*(x-loc)/scale), with phi
    and Phi the standard normal pdf and cdf.
    """
    validate_params(p)
    z = (np.asarray(x, dtype=float) - p.loc) / p.scale
    return 2.0 / p.scale * norm.pdf(z) * norm.cdf(p.shape * z)


def histogram(s: ScoreSample, bin_count: int) -> Histogram:
    """Bin a sample into ``bin_count`` uniform bins over [min, max].

    Bins are right-open except the last, which is right-closed, so every
    value lands in exactly one bin and counts always sum to len(s).
    A constant sample collapses to a single bin of width 1 centered on
    the value.
    """
    values = np.asarray(s, dtype=float)
    if values.size == 0:
        raise ValueError("empty sample")
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    lo = float(values.min())
    hi = float(values.max())
    if lo == hi:
        return Histogram(edges=(lo - 0.5, lo + 0.5), counts=(int(values.size),))
    counts, edges = np.histogram(values, bins=bin_count, range=(lo, hi))
    return Histogram(
        edges=tuple(float(e) for e in edges),
        counts=tuple(int(c) for c in counts),
    )
