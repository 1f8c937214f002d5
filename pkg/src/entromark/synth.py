"""Synthetic test material: natural-looking hosts and a logo watermark.

The host generator layers band-limited noise: isotropic blobs for scene
structure plus an anisotropic grain (streaks a few pixels wide, wood or
fabric like) that puts real energy into the horizontal-detail wavelet
bands.  That mimics the statistics of textured photographs without
shipping image assets, and everything is seeded and deterministic.
"""

import numpy as np
from scipy import ndimage

from .errors import ParameterError

__all__ = ["host_image", "logo_watermark"]

# ((vertical, horizontal) feature size in pixels, relative amplitude)
_COMPONENTS = (
    ((64, 64), 0.4),
    ((32, 32), 0.4),
    ((32, 8), 1.0),
    ((16, 8), 0.55),
)


def host_image(size=512, seed=0) -> np.ndarray:
    """Deterministic textured grayscale host, values inside [8, 248]."""
    if size < 64 or size % 64:
        raise ParameterError("host size must be a multiple of 64")
    rng = np.random.default_rng(seed)
    acc = np.zeros((size, size))
    for (tall, wide), amp in _COMPONENTS:
        grid = (size // tall, size // wide)
        layer = ndimage.zoom(rng.standard_normal(grid), (tall, wide), order=3)
        acc += amp * layer[:size, :size]
    acc -= acc.mean()
    acc *= 120.0 / np.abs(acc).max()
    return np.clip(np.rint(acc + 128.0), 0, 255).astype(np.uint8)


def logo_watermark() -> np.ndarray:
    """32x32 block-letter mark (reads "EM"), roughly one quarter ones."""
    wm = np.zeros((32, 32), dtype=np.uint8)
    wm[5:27, 4:7] = 1  # E spine
    wm[5:8, 4:14] = 1  # E top arm
    wm[15:18, 4:12] = 1  # E middle arm
    wm[24:27, 4:14] = 1  # E bottom arm
    wm[5:27, 18:21] = 1  # M left post
    wm[5:27, 27:30] = 1  # M right post
    wm[8:13, 21:23] = 1  # M left slope
    wm[11:17, 23:25] = 1  # M center dip
    wm[8:13, 25:27] = 1  # M right slope
    return wm
