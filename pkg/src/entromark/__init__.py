"""Blind wavelet-domain image watermarking with fuzzy-entropy coefficient
selection, plus the attack and metric toolkit used to evaluate it."""

from .attacks import (
    BASE_LUMINANCE_TABLE,
    jpeg_like,
    luminance_table,
    median_filter,
    sharpen,
)
from .dwt import (
    DAUB4,
    HAAR,
    Subband,
    WaveletFilter,
    WaveletPyramid,
    forward,
    get_filter,
    inverse,
    inverse_plane,
    subband_bounds,
    subband_ids,
    subband_view,
)
from .embedder import (
    EmbedParams,
    EmbedResult,
    WatermarkKey,
    block_layout,
    embed,
    extract,
    load_key,
    reference_count,
    save_key,
    select_coefficients,
    sort_watermark,
)
from .errors import (
    DegenerateSubbandError,
    EntromarkError,
    FormatError,
    ParameterError,
)
from .fuzzy_entropy import (
    DEFAULT_PARTITION,
    MembershipPartition,
    SubbandStats,
    entropy,
    entropy_map,
    mu_more,
    normalize_context,
    rule_activation,
    subband_stats,
)
from .image_io import (
    as_gray_image,
    as_watermark,
    load_gray,
    load_watermark,
    store_gray,
    store_watermark,
)
from .metrics import correlation, error_rate, psnr
from .synth import host_image, logo_watermark

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "EntromarkError",
    "FormatError",
    "ParameterError",
    "DegenerateSubbandError",
    # wavelet transform
    "WaveletFilter",
    "HAAR",
    "DAUB4",
    "get_filter",
    "Subband",
    "WaveletPyramid",
    "forward",
    "inverse",
    "inverse_plane",
    "subband_ids",
    "subband_bounds",
    "subband_view",
    # fuzzy entropy
    "SubbandStats",
    "subband_stats",
    "mu_more",
    "MembershipPartition",
    "DEFAULT_PARTITION",
    "normalize_context",
    "rule_activation",
    "entropy",
    "entropy_map",
    # embedding
    "EmbedParams",
    "WatermarkKey",
    "EmbedResult",
    "sort_watermark",
    "reference_count",
    "block_layout",
    "select_coefficients",
    "embed",
    "extract",
    "save_key",
    "load_key",
    # attacks
    "BASE_LUMINANCE_TABLE",
    "luminance_table",
    "jpeg_like",
    "median_filter",
    "sharpen",
    # metrics
    "psnr",
    "correlation",
    "error_rate",
    # file I/O
    "load_gray",
    "store_gray",
    "load_watermark",
    "store_watermark",
    "as_gray_image",
    "as_watermark",
    # synthetic material
    "host_image",
    "logo_watermark",
]
