"""Blind watermark embedding and extraction in a wavelet subband.

The watermark bits are sorted ascending, so all zeros come first and
all ones last.  Host coefficients are the subband positions with the
highest fuzzy entropy; among the selected positions, ordering by
ascending coefficient magnitude groups similar magnitudes together.
The ordered run is cut into blocks of `tau` data coefficients fenced by
untouched reference coefficients, and each data magnitude is pushed to

    (|lo ref| + |hi ref|) / 2  +  v * bit

where v is the position's entropy scaled by the subband statistic T1.
Extraction needs only the key (positions, v, permutation) and the two
fencing references of each block, never the original image: the bit is
recovered by thresholding the normalized offset from the local
reference mean at 1/2.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import dwt
from .errors import FormatError, ParameterError
from .fuzzy_entropy import entropy_map, subband_stats
from .image_io import as_gray_image, as_watermark

__all__ = [
    "KEY_VERSION",
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
]

KEY_VERSION = 1


@dataclass(frozen=True)
class EmbedParams:
    """Embedding configuration: wavelet decomposition and block size."""

    subband: str = "HL3"
    levels: int = 3
    tau: int = 16
    filter: str = "haar"

    def __post_init__(self):
        if not isinstance(self.levels, int) or self.levels < 1:
            raise ParameterError("levels must be a positive integer")
        if not isinstance(self.tau, int) or self.tau < 1:
            raise ParameterError("tau must be a positive integer")
        dwt.get_filter(self.filter)
        band = dwt.Subband.parse(self.subband)
        if band.level > self.levels:
            raise ParameterError(
                f"subband {self.subband} needs {band.level} levels, have {self.levels}"
            )
        if band.orientation == "LL" and band.level != self.levels:
            raise ParameterError("LL exists only at the coarsest level")


@dataclass(frozen=True)
class WatermarkKey:
    """Everything extraction needs besides the watermarked image."""

    filter: str
    levels: int
    subband: str
    tau: int
    n: int
    t: int
    wm_width: int
    wm_height: int
    img_width: int
    img_height: int
    positions: np.ndarray  # (n + t, 2) row/col, magnitude-ascending order
    v: np.ndarray  # (n,) embedding strength per data coefficient
    wm_perm: np.ndarray  # (n,) source bit index of each sorted slot
    version: int = KEY_VERSION


@dataclass(frozen=True)
class EmbedResult:
    image: np.ndarray
    key: WatermarkKey


def sort_watermark(wm):
    """Flatten and stably sort the bits ascending.

    Returns (sorted_bits, perm) with wm.flat[perm[k]] == sorted_bits[k].
    """
    bits = as_watermark(wm).ravel()
    perm = np.argsort(bits, kind="stable")
    return bits[perm], perm


def reference_count(n, tau) -> int:
    """Number of reference coefficients fencing n bits in blocks of tau."""
    if n < 1:
        raise ParameterError("watermark must contain at least one bit")
    if tau < 1:
        raise ParameterError("tau must be a positive integer")
    return n // tau + (1 if n % tau == 0 else 2)


def block_layout(n, tau):
    """Blocks as (lo_ref, [data...], hi_ref) indices into the selected run.

    Indices are 0-based over the p = n + reference_count(n, tau) selected
    coefficients.  Full blocks of tau data sit between consecutive
    references; a shorter tail block of n mod tau data is fenced by the
    last full-block reference and the final coefficient.
    """
    t = reference_count(n, tau)
    p = n + t
    q, r = divmod(n, tau)
    blocks = []
    for b in range(q):
        lo = b * (tau + 1)
        blocks.append((lo, list(range(lo + 1, lo + 1 + tau)), lo + tau + 1))
    if r:
        blocks.append((q * (tau + 1), list(range(p - r - 1, p - 1)), p - 1))
    return blocks


def select_coefficients(coeffs, entropies, count) -> np.ndarray:
    """Positions of the `count` highest-entropy coefficients, ordered by
    ascending magnitude.

    Both stages break ties row-major.  Returns an (count, 2) int array of
    (row, col) pairs.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    entropies = np.asarray(entropies, dtype=np.float64)
    if coeffs.shape != entropies.shape or coeffs.ndim != 2:
        raise ParameterError("coeffs and entropies must be equal-shape 2-D arrays")
    if not 1 <= count <= coeffs.size:
        raise ParameterError(
            f"cannot select {count} coefficients from a {coeffs.size}-element subband"
        )
    chosen = np.argsort(-entropies.ravel(), kind="stable")[:count]
    order = np.lexsort((chosen, np.abs(coeffs.ravel()[chosen])))
    return np.column_stack(np.unravel_index(chosen[order], coeffs.shape)).astype(np.int64)


def _data_slots(blocks):
    """SC indices of data coefficients in bit-consumption order."""
    return [j for _, data, _ in blocks for j in data]


def embed(img, wm, params: EmbedParams = EmbedParams()) -> EmbedResult:
    """Hide a binary watermark in one subband of the image.

    Returns the marked image and the extraction key.  The host image is
    not needed again: references are left untouched and the per-bit
    strengths v travel in the key.
    """
    img = as_gray_image(img)
    wm = as_watermark(wm)
    band = dwt.Subband.parse(params.subband)

    pyr = dwt.forward(img, params.levels, params.filter)
    view = dwt.subband_view(pyr, band)
    stats = subband_stats(view)
    ent = entropy_map(view, stats)

    n = int(wm.size)
    t = reference_count(n, params.tau)
    p = n + t
    if p > view.size:
        raise ParameterError(
            f"watermark needs {p} coefficients, subband {params.subband} has {view.size}"
        )
    positions = select_coefficients(view, ent, p)
    sorted_bits, perm = sort_watermark(wm)
    blocks = block_layout(n, params.tau)
    slots = _data_slots(blocks)

    rows, cols = positions[:, 0], positions[:, 1]
    mags = np.abs(view[rows, cols])
    signs = np.where(view[rows, cols] >= 0.0, 1.0, -1.0)
    v = ent[rows[slots], cols[slots]] * stats.t1

    new_mags = mags.copy()
    k = 0
    for lo, data, hi in blocks:
        base = (mags[lo] + mags[hi]) / 2.0
        for j in data:
            new_mags[j] = base + v[k] * sorted_bits[k]
            k += 1
    view[rows, cols] = signs * new_mags

    key = WatermarkKey(
        filter=params.filter,
        levels=params.levels,
        subband=str(band),
        tau=params.tau,
        n=n,
        t=t,
        wm_width=wm.shape[1],
        wm_height=wm.shape[0],
        img_width=img.shape[1],
        img_height=img.shape[0],
        positions=positions,
        v=v,
        wm_perm=perm,
    )
    return EmbedResult(dwt.inverse(pyr), key)


def extract(img, key: WatermarkKey) -> np.ndarray:
    """Recover the watermark from a (possibly attacked) marked image."""
    img = as_gray_image(img)
    if img.shape != (key.img_height, key.img_width):
        raise ParameterError(
            f"image is {img.shape[1]}x{img.shape[0]}, key expects "
            f"{key.img_width}x{key.img_height}"
        )
    pyr = dwt.forward(img, key.levels, key.filter)
    view = dwt.subband_view(pyr, dwt.Subband.parse(key.subband))
    rows, cols = key.positions[:, 0], key.positions[:, 1]
    mags = np.abs(view[rows, cols])

    blocks = block_layout(key.n, key.tau)
    sorted_bits = np.empty(key.n, dtype=np.uint8)
    k = 0
    for lo, data, hi in blocks:
        base = (mags[lo] + mags[hi]) / 2.0
        for j in data:
            raw = (mags[j] - base) / key.v[k]
            sorted_bits[k] = 1 if raw >= 0.5 else 0
            k += 1

    out = np.empty(key.n, dtype=np.uint8)
    out[key.wm_perm] = sorted_bits
    return out.reshape(key.wm_height, key.wm_width)


_KEY_SCALARS = {
    "version": int,
    "filter": str,
    "levels": int,
    "subband": str,
    "tau": int,
    "n": int,
    "t": int,
    "wm_width": int,
    "wm_height": int,
    "img_width": int,
    "img_height": int,
}


def save_key(key: WatermarkKey, path) -> None:
    """Write the key as JSON; floats round-trip exactly."""
    doc = {name: getattr(key, name) for name in _KEY_SCALARS}
    doc["positions"] = [[int(r), int(c)] for r, c in key.positions]
    doc["v"] = [float(x) for x in key.v]
    doc["wm_perm"] = [int(x) for x in key.wm_perm]
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def _key_field(doc, name, kind):
    if name not in doc:
        raise FormatError(f"key is missing field '{name}'")
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"key field '{name}' must be {kind.__name__}")
    return value


def load_key(path) -> WatermarkKey:
    """Read and validate a key written by save_key."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            doc = json.load(fh)
    except (ValueError, UnicodeDecodeError) as exc:
        raise FormatError(f"key is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("key must be a JSON object")

    fields = {name: _key_field(doc, name, kind) for name, kind in _KEY_SCALARS.items()}
    if fields["version"] != KEY_VERSION:
        raise FormatError(f"unsupported key version {fields['version']}")
    for name in ("levels", "tau", "n", "t", "wm_width", "wm_height",
                 "img_width", "img_height"):
        if fields[name] < 1:
            raise FormatError(f"key field '{name}' must be positive")
    n, t, tau = fields["n"], fields["t"], fields["tau"]
    if fields["wm_width"] * fields["wm_height"] != n:
        raise FormatError("key watermark dimensions do not match n")
    if t != reference_count(n, tau):
        raise FormatError("key field 't' is inconsistent with n and tau")

    positions = _key_field(doc, "positions", list)
    if len(positions) != n + t:
        raise FormatError(f"key needs {n + t} positions, found {len(positions)}")
    for pair in positions:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
            or min(pair) < 0
        ):
            raise FormatError("key positions must be [row, col] pairs of ints >= 0")
    if len({tuple(pair) for pair in positions}) != len(positions):
        raise FormatError("key positions must be distinct")

    v = _key_field(doc, "v", list)
    if len(v) != n:
        raise FormatError(f"key needs {n} strength entries, found {len(v)}")
    for x in v:
        if not isinstance(x, (int, float)) or isinstance(x, bool) or not x > 0:
            raise FormatError("key strengths must be positive numbers")

    perm = _key_field(doc, "wm_perm", list)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise FormatError("key field 'wm_perm' must be a permutation of 0..n-1")

    try:
        band = dwt.Subband.parse(fields["subband"])
        dwt.get_filter(fields["filter"])
        _, _, sub_h, sub_w = dwt.subband_bounds(
            (fields["img_height"], fields["img_width"]), fields["levels"], band
        )
    except ParameterError as exc:
        raise FormatError(f"key geometry is invalid: {exc}") from exc
    if any(r >= sub_h or c >= sub_w for r, c in positions):
        raise FormatError(f"key positions exceed the {sub_w}x{sub_h} subband")

    return WatermarkKey(
        filter=fields["filter"],
        levels=fields["levels"],
        subband=fields["subband"],
        tau=tau,
        n=n,
        t=t,
        wm_width=fields["wm_width"],
        wm_height=fields["wm_height"],
        img_width=fields["img_width"],
        img_height=fields["img_height"],
        positions=np.asarray(positions, dtype=np.int64).reshape(n + t, 2),
        v=np.asarray(v, dtype=np.float64),
        wm_perm=np.asarray(perm, dtype=np.int64),
        version=KEY_VERSION,
    )
