"""Multilevel 2-D orthonormal wavelet decomposition with exact inverse.

The transform is dyadic and separable: each level filters rows then
columns with an orthonormal lowpass/highpass pair, downsampling by two,
and recurses on the LL quadrant only.  Boundaries wrap (periodic
convolution), which keeps the transform orthonormal and therefore
energy-preserving and perfectly invertible in float64.

Coefficients are stored in the standard quadrant layout with the
coarsest approximation top-left.  For a K-level decomposition the plane
holds 3K + 1 subbands; `subband_bounds` gives the window of each.  The
HL orientation is the vertical-edge quadrant (highpass along rows,
lowpass along columns), which sits top-right of its level.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .image_io import as_gray_image

__all__ = [
    "WaveletFilter",
    "HAAR",
    "DAUB4",
    "get_filter",
    "Subband",
    "subband_ids",
    "WaveletPyramid",
    "forward",
    "inverse",
    "inverse_plane",
    "subband_bounds",
    "subband_view",
]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class WaveletFilter:
    """An orthonormal analysis filter pair (lowpass, highpass)."""

    name: str
    lowpass: tuple
    highpass: tuple


HAAR = WaveletFilter("haar", (1 / _SQRT2, 1 / _SQRT2), (1 / _SQRT2, -1 / _SQRT2))

_D4_LO = (
    (1 + _SQRT3) / (4 * _SQRT2),
    (3 + _SQRT3) / (4 * _SQRT2),
    (3 - _SQRT3) / (4 * _SQRT2),
    (1 - _SQRT3) / (4 * _SQRT2),
)
DAUB4 = WaveletFilter(
    "daub4", _D4_LO, (_D4_LO[3], -_D4_LO[2], _D4_LO[1], -_D4_LO[0])
)

_FILTERS = {"haar": HAAR, "daub4": DAUB4}


def get_filter(filt) -> WaveletFilter:
    """Resolve a filter by name ("haar", "daub4") or pass one through."""
    if isinstance(filt, WaveletFilter):
        return filt
    try:
        return _FILTERS[str(filt).lower()]
    except KeyError:
        raise ParameterError(
            f"unknown wavelet filter {filt!r}; choose from {sorted(_FILTERS)}"
        ) from None


_ORIENTATIONS = ("LL", "HL", "LH", "HH")


@dataclass(frozen=True)
class Subband:
    """One quadrant of the pyramid: orientation LL/HL/LH/HH at a level."""

    orientation: str
    level: int

    @classmethod
    def parse(cls, text: str) -> "Subband":
        text = str(text).strip().upper()
        if len(text) < 3 or text[:2] not in _ORIENTATIONS:
            raise ParameterError(f"bad subband {text!r}; expected e.g. 'HL3'")
        try:
            level = int(text[2:])
        except ValueError:
            raise ParameterError(f"bad subband level in {text!r}") from None
        if level < 1:
            raise ParameterError(f"subband level must be >= 1, got {level}")
        return cls(text[:2], level)

    def __str__(self) -> str:
        return f"{self.orientation}{self.level}"


def subband_ids(levels: int):
    """All subbands of a `levels`-deep pyramid, coarsest first."""
    ids = [Subband("LL", levels)]
    for level in range(levels, 0, -1):
        ids += [Subband("HL", level), Subband("LH", level), Subband("HH", level)]
    return ids


@dataclass
class WaveletPyramid:
    """Decomposition result: coefficient plane plus metadata.

    `coeffs` has the same shape as the source image (float64) with
    subbands in quadrant layout; `levels` and `filter_name` are what
    `inverse` needs to reconstruct.
    """

    coeffs: np.ndarray
    levels: int
    filter_name: str


def _check_geometry(shape, levels):
    if levels < 1:
        raise ParameterError(f"levels must be >= 1, got {levels}")
    height, width = shape
    div = 1 << levels
    if height % div or width % div:
        raise ParameterError(
            f"image dims {width}x{height} must be divisible by 2^levels = {div}"
        )


def _analyze(data, taps, axis):
    """Periodic convolution y[n] = sum_k taps[k] * x[2n+k] along `axis`."""
    out = None
    for k, c in enumerate(taps):
        term = c * np.roll(data, -k, axis=axis)
        out = term if out is None else out + term
    keep = [slice(None)] * data.ndim
    keep[axis] = slice(0, None, 2)
    return out[tuple(keep)]


def _synthesize(low, high, lo_taps, hi_taps, axis):
    """Adjoint of `_analyze`: upsample by two and filter, summing branches."""
    shape = list(low.shape)
    shape[axis] *= 2
    recon = np.zeros(shape)
    for half, taps in ((low, lo_taps), (high, hi_taps)):
        up = np.zeros(shape)
        sl = [slice(None)] * up.ndim
        sl[axis] = slice(0, None, 2)
        up[tuple(sl)] = half
        for k, c in enumerate(taps):
            recon += c * np.roll(up, k, axis=axis)
    return recon


def forward(img, levels: int = 3, filt="haar") -> WaveletPyramid:
    """Decompose a gray image into a `levels`-deep wavelet pyramid."""
    arr = as_gray_image(img)
    _check_geometry(arr.shape, levels)
    wf = get_filter(filt)
    coeffs = arr.astype(np.float64)
    for level in range(levels):
        rows = coeffs.shape[0] >> level
        cols = coeffs.shape[1] >> level
        region = coeffs[:rows, :cols]
        lo = _analyze(region, wf.lowpass, axis=1)
        hi = _analyze(region, wf.highpass, axis=1)
        merged = np.concatenate([lo, hi], axis=1)
        top = _analyze(merged, wf.lowpass, axis=0)
        bottom = _analyze(merged, wf.highpass, axis=0)
        region[: rows // 2] = top
        region[rows // 2 :] = bottom
    return WaveletPyramid(coeffs, levels, wf.name)


def inverse_plane(pyr: WaveletPyramid) -> np.ndarray:
    """Reconstruct the real-valued plane (no rounding or clamping)."""
    _check_geometry(pyr.coeffs.shape, pyr.levels)
    wf = get_filter(pyr.filter_name)
    plane = np.array(pyr.coeffs, dtype=np.float64)
    for level in range(pyr.levels - 1, -1, -1):
        rows = plane.shape[0] >> level
        cols = plane.shape[1] >> level
        region = plane[:rows, :cols]
        merged = _synthesize(
            region[: rows // 2], region[rows // 2 :], wf.lowpass, wf.highpass, axis=0
        )
        region[:] = _synthesize(
            merged[:, : cols // 2], merged[:, cols // 2 :], wf.lowpass, wf.highpass, axis=1
        )
    return plane


def inverse(pyr: WaveletPyramid) -> np.ndarray:
    """Reconstruct an 8-bit gray image (round to nearest, clamp to [0, 255])."""
    plane = inverse_plane(pyr)
    return np.clip(np.rint(plane), 0, 255).astype(np.uint8)


def subband_bounds(shape, levels: int, sub: Subband):
    """Window (row, col, height, width) of `sub` in the coefficient plane."""
    if isinstance(sub, str):
        sub = Subband.parse(sub)
    height, width = shape
    if not 1 <= sub.level <= levels:
        raise ParameterError(
            f"subband level {sub.level} outside pyramid levels 1..{levels}"
        )
    if sub.orientation == "LL" and sub.level != levels:
        raise ParameterError("LL exists only at the coarsest level")
    if sub.orientation not in _ORIENTATIONS:
        raise ParameterError(f"bad orientation {sub.orientation!r}")
    sub_h = height >> sub.level
    sub_w = width >> sub.level
    row = 0 if sub.orientation in ("LL", "HL") else sub_h
    col = 0 if sub.orientation in ("LL", "LH") else sub_w
    return row, col, sub_h, sub_w


def subband_view(pyr: WaveletPyramid, sub) -> np.ndarray:
    """Writable view of one subband's coefficients."""
    row, col, sub_h, sub_w = subband_bounds(pyr.coeffs.shape, pyr.levels, sub)
    return pyr.coeffs[row : row + sub_h, col : col + sub_w]
