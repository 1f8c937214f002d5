"""Robustness attacks: JPEG-style compression, median filter, sharpen.

All attacks take and return 8-bit grayscale images.  The JPEG-style
attack reproduces the lossy part of baseline JPEG on the luma channel
(blockwise DCT + quantization by the scaled standard luminance table)
without entropy coding, so the degradation matches real JPEG at the
same quality factor while staying exactly reproducible.
"""

import numpy as np
from scipy import fft, ndimage

from .errors import ParameterError
from .image_io import as_gray_image

__all__ = [
    "BASE_LUMINANCE_TABLE",
    "luminance_table",
    "jpeg_like",
    "median_filter",
    "sharpen",
]

BASE_LUMINANCE_TABLE = np.array(
    [
        [16, 11, 10, 16, 24, 40, 51, 61],
        [12, 12, 14, 19, 26, 58, 60, 55],
        [14, 13, 16, 24, 40, 57, 69, 56],
        [14, 17, 22, 29, 51, 87, 80, 62],
        [18, 22, 37, 56, 68, 109, 103, 77],
        [24, 35, 55, 64, 81, 104, 113, 92],
        [49, 64, 78, 87, 103, 121, 120, 101],
        [72, 92, 95, 98, 112, 100, 103, 99],
    ],
    dtype=np.float64,
)


def _check_quality(quality) -> int:
    if not isinstance(quality, (int, np.integer)) or isinstance(quality, bool):
        raise ParameterError("quality must be an integer in [1, 100]")
    quality = int(quality)
    if not 1 <= quality <= 100:
        raise ParameterError(f"quality {quality} outside [1, 100]")
    return quality


def luminance_table(quality) -> np.ndarray:
    """Luminance quantization table scaled to an IJG quality factor.

    quality 50 returns the base table, 100 degenerates to all ones
    (lossless quantization), lower quality scales entries up.
    """
    quality = _check_quality(quality)
    scale = 5000.0 / quality if quality < 50 else 200.0 - 2.0 * quality
    table = np.floor((BASE_LUMINANCE_TABLE * scale + 50.0) / 100.0)
    return np.clip(table, 1.0, 255.0)


def jpeg_like(img, quality) -> np.ndarray:
    """Quantize the image in the 8x8 blockwise DCT domain.

    Level shift by -128, orthonormal DCT-II per block, round each
    coefficient to the nearest multiple of the scaled luminance table
    entry, invert.  Images whose sides are not multiples of 8 are
    edge-padded for the transform and cropped back.
    """
    img = as_gray_image(img)
    table = luminance_table(quality)
    h, w = img.shape
    pad_h = (-h) % 8
    pad_w = (-w) % 8
    data = np.pad(img.astype(np.float64), ((0, pad_h), (0, pad_w)), mode="edge")
    data -= 128.0
    hb, wb = data.shape[0] // 8, data.shape[1] // 8
    blocks = data.reshape(hb, 8, wb, 8).transpose(0, 2, 1, 3)
    spect = fft.dctn(blocks, axes=(-2, -1), norm="ortho")
    spect = np.round(spect / table) * table
    blocks = fft.idctn(spect, axes=(-2, -1), norm="ortho")
    data = blocks.transpose(0, 2, 1, 3).reshape(hb * 8, wb * 8)
    data = data[:h, :w] + 128.0
    return np.clip(np.rint(data), 0, 255).astype(np.uint8)


def median_filter(img, window=3) -> np.ndarray:
    """Square median filter with odd window size; borders repeat edges."""
    img = as_gray_image(img)
    if not isinstance(window, (int, np.integer)) or isinstance(window, bool):
        raise ParameterError("window must be an odd integer >= 1")
    window = int(window)
    if window < 1 or window % 2 == 0:
        raise ParameterError(f"window must be odd, got {window}")
    return ndimage.median_filter(img, size=window, mode="nearest")


_SHARPEN_KERNEL = np.array([[0, -1, 0], [-1, 5, -1], [0, -1, 0]], dtype=np.float64)


def sharpen(img) -> np.ndarray:
    """Unsharp 3x3 Laplacian boost (center 5, cross -1)."""
    img = as_gray_image(img)
    out = ndimage.convolve(img.astype(np.float64), _SHARPEN_KERNEL, mode="nearest")
    return np.clip(np.rint(out), 0, 255).astype(np.uint8)
