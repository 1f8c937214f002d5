"""Fidelity and detection metrics."""

import math

import numpy as np

from .errors import ParameterError
from .image_io import as_gray_image, as_watermark

__all__ = ["psnr", "correlation", "error_rate"]

_PEAK = 255.0


def psnr(original, distorted) -> float:
    """Peak signal-to-noise ratio in dB between two 8-bit images.

    Identical images give math.inf.
    """
    a = as_gray_image(original).astype(np.float64)
    b = as_gray_image(distorted).astype(np.float64)
    if a.shape != b.shape:
        raise ParameterError(f"image shapes differ: {a.shape} vs {b.shape}")
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(_PEAK * _PEAK / mse)


def correlation(expected, recovered) -> float:
    """Pearson correlation between two equal-shape binary watermarks."""
    w = as_watermark(expected).astype(np.float64).ravel()
    v = as_watermark(recovered).astype(np.float64).ravel()
    if w.shape != v.shape:
        raise ParameterError(f"watermark sizes differ: {w.size} vs {v.size}")
    dw = w - w.mean()
    dv = v - v.mean()
    denom = math.sqrt(float(dw @ dw) * float(dv @ dv))
    if denom == 0.0:
        raise ParameterError("correlation undefined: a watermark is constant")
    return float(dw @ dv) / denom


def error_rate(expected, recovered) -> float:
    """Fraction of watermark bits that differ."""
    w = as_watermark(expected).ravel()
    v = as_watermark(recovered).ravel()
    if w.shape != v.shape:
        raise ParameterError(f"watermark sizes differ: {w.size} vs {v.size}")
    return float(np.count_nonzero(w != v)) / w.size
