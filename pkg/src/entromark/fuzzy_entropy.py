"""Per-coefficient fuzzy entropy of a wavelet subband.

Every coefficient is judged by its 3x3 context.  The context magnitudes
are normalized against subband statistics (the center by the mean T0,
edge neighbours by T1, corner neighbours by T2), graded by five
triangular membership functions from Very Low to Very High, and five
rules of the form "if more of the context is <grade>, the entropy is
<grade>" are fired.  The rule weights use an S-shaped "more" modifier so
that a grade supported by many context members fires harder.  The
defuzzified sum of rule activations is the entropy: high values mark
visually busy neighbourhoods that hide watermark energy well.

Context template (row-major order used throughout this module)::

    x1 x2 x3
    x4 x0 x5
    x6 x7 x8

Entropy is invariant to scaling the whole subband, because the T
statistics scale along with the coefficients.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateSubbandError, ParameterError

__all__ = [
    "MORE_ALPHA",
    "MORE_BETA",
    "SubbandStats",
    "subband_stats",
    "mu_more",
    "MembershipPartition",
    "DEFAULT_PARTITION",
    "normalize_context",
    "rule_activation",
    "entropy",
    "entropy_map",
]

# steepness and midpoint of the sigmoid "more" modifier
MORE_ALPHA = 7.80375
MORE_BETA = 3.29596


class SubbandStats(NamedTuple):
    """Magnitude statistics of one subband: T0 mean, T1/T2 spread-shifted."""

    t0: float
    t1: float
    t2: float


def subband_stats(coeffs) -> SubbandStats:
    """T0 = mean |c|, T1 = T0 + Std|c|/16, T2 = T0 + Std|c|/8.

    Std is the population standard deviation.  Raises
    DegenerateSubbandError when the subband is all zero (T0 = 0), since
    nothing can be normalized against it.
    """
    mags = np.abs(np.asarray(coeffs, dtype=np.float64))
    if mags.size == 0:
        raise ParameterError("subband window is empty")
    t0 = float(mags.mean())
    if t0 == 0.0:
        raise DegenerateSubbandError("subband is all zero; statistics undefined")
    std = float(mags.std())
    return SubbandStats(t0, t0 + std / 16.0, t0 + std / 8.0)


def mu_more(z):
    """S-shaped weight 1 / (1 + exp(-(alpha*z - beta))) for z in [0, 1]."""
    z = np.asarray(z, dtype=np.float64)
    if np.any(z < 0.0) or np.any(z > 1.0):
        raise ParameterError("mu_more argument must lie in [0, 1]")
    out = 1.0 / (1.0 + np.exp(-(MORE_ALPHA * z - MORE_BETA)))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class MembershipPartition:
    """Triangular partition of the normalized-coefficient domain.

    Five input grades (Very Low .. Very High) with unit-sum triangles:
    peaks at `input_centers`, support half-width `half_width`; inputs are
    clamped to the domain before grading.  `output_centers` are the
    defuzzification centers C_1..C_5 paired with the grades.
    """

    input_centers: tuple = (0.0, 0.5, 1.0, 1.5, 2.0)
    half_width: float = 0.5
    output_centers: tuple = (0.1, 0.3, 0.5, 0.7, 0.9)

    @property
    def domain_max(self) -> float:
        return self.input_centers[-1]

    def memberships(self, nfc):
        """Membership degrees of `nfc` (..., ) in all five grades (..., 5)."""
        x = np.asarray(nfc, dtype=np.float64)[..., np.newaxis]
        centers = np.asarray(self.input_centers)
        return np.maximum(0.0, 1.0 - np.abs(x - centers) / self.half_width)


DEFAULT_PARTITION = MembershipPartition()

# which T statistic divides each slot of the flattened 3x3 template:
# center by T0, edge-adjacent neighbours by T1, corners by T2
_DIVISOR_SLOT = np.array([2, 1, 2, 1, 0, 1, 2, 1, 2])


def normalize_context(raw, stats: SubbandStats, partition=DEFAULT_PARTITION):
    """Normalize a 3x3 window of coefficients into fuzzy-coefficient space.

    Magnitudes are divided by (T0, T1, T2) according to template slot and
    clamped to the partition domain.  Returns the nine normalized values
    flattened row-major.
    """
    raw = np.abs(np.asarray(raw, dtype=np.float64)).reshape(9)
    if stats.t0 <= 0.0:
        raise DegenerateSubbandError("cannot normalize against T0 = 0")
    divisors = np.asarray(stats)[_DIVISOR_SLOT]
    return np.clip(raw / divisors, 0.0, partition.domain_max)


def _activations(nfc, partition):
    """Rule activations for contexts given as (..., 9) normalized values."""
    mu = partition.memberships(nfc)  # (..., 9, 5)
    support = mu > 0.0
    count = support.sum(axis=-2)  # (..., 5)
    lowest = np.where(support, mu, np.inf).min(axis=-2)
    weight = mu_more(count / 9.0)
    return np.where(count > 0, lowest * weight, 0.0)


def rule_activation(ctx, partition=DEFAULT_PARTITION):
    """Activity degrees of the five rules for one normalized 3x3 context.

    Rule k fires at min membership over its supporting context members,
    weighted by mu_more(|support| / 9); a rule with no support stays 0.
    """
    nfc = np.asarray(ctx, dtype=np.float64).reshape(9)
    return _activations(nfc, partition)


def entropy(ctx, partition=DEFAULT_PARTITION) -> float:
    """Defuzzified entropy of one context: sum of C_k * lambda_k."""
    lam = rule_activation(ctx, partition)
    return float((lam * np.asarray(partition.output_centers)).sum())


def entropy_map(coeffs, stats=None, partition=DEFAULT_PARTITION) -> np.ndarray:
    """Entropy of every coefficient in a subband window.

    Border contexts replicate the edge coefficient.  `stats` defaults to
    `subband_stats(coeffs)`; pass them in when already computed.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    if coeffs.ndim != 2 or coeffs.size == 0:
        raise ParameterError("entropy_map expects a non-empty 2-D window")
    if stats is None:
        stats = subband_stats(coeffs)
    if stats.t0 <= 0.0:
        raise DegenerateSubbandError("cannot normalize against T0 = 0")
    mags = np.abs(coeffs)
    padded = np.pad(mags, 1, mode="edge")
    rows, cols = mags.shape
    ctx = np.empty((rows, cols, 9))
    for slot, (dr, dc) in enumerate((r, c) for r in range(3) for c in range(3)):
        ctx[:, :, slot] = padded[dr : dr + rows, dc : dc + cols]
    divisors = np.asarray(stats)[_DIVISOR_SLOT]
    nfc = np.clip(ctx / divisors, 0.0, partition.domain_max)
    lam = _activations(nfc, partition)  # (rows, cols, 5)
    return (lam * np.asarray(partition.output_centers)).sum(axis=-1)
