"""Bit-exact Netpbm I/O for grayscale hosts and binary watermarks.

A gray image is a 2-D uint8 numpy array (row-major luminance samples).
A binary watermark is a 2-D uint8 numpy array holding only 0 and 1,
where 1 is the foreground (dark) bit.

Files are never repaired on load: anything out of contract raises
FormatError instead of returning a clamped or padded image.
"""

import numpy as np

from .errors import FormatError, ParameterError

__all__ = [
    "as_gray_image",
    "as_watermark",
    "load_gray",
    "store_gray",
    "load_watermark",
    "store_watermark",
]


def as_gray_image(img) -> np.ndarray:
    """Validate and return `img` as a 2-D uint8 array."""
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.size == 0:
        raise ParameterError("gray image must be a non-empty 2-D array")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ParameterError("gray image samples must be integers")
        if arr.min() < 0 or arr.max() > 255:
            raise ParameterError("gray image samples must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def as_watermark(wm) -> np.ndarray:
    """Validate and return `wm` as a 2-D uint8 array of 0/1 bits."""
    arr = np.asarray(wm)
    if arr.ndim != 2 or arr.size == 0:
        raise ParameterError("watermark must be a non-empty 2-D array")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ParameterError("watermark bits must be integers")
    if np.any((arr != 0) & (arr != 1)):
        raise ParameterError("watermark bits must be 0 or 1")
    return arr.astype(np.uint8)


def _read_tokens(data: bytes, count: int, start: int):
    """Read `count` whitespace-separated header tokens starting at `start`.

    Netpbm comments (# to end of line) are skipped.  Returns the tokens and
    the offset one whitespace character past the last token.
    """
    tokens = []
    i = start
    while len(tokens) < count:
        while i < len(data):
            if data[i : i + 1].isspace():
                i += 1
            elif data[i : i + 1] == b"#":
                while i < len(data) and data[i] not in b"\r\n":
                    i += 1
            else:
                break
        j = i
        while j < len(data) and not data[j : j + 1].isspace():
            j += 1
        if j == i:
            raise FormatError("malformed header: fewer tokens than expected")
        tokens.append(data[i:j])
        i = j
    if i >= len(data) or not data[i : i + 1].isspace():
        raise FormatError("malformed header: missing whitespace after header")
    return tokens, i + 1


def _parse_dims(wtok: bytes, htok: bytes):
    try:
        width, height = int(wtok), int(htok)
    except ValueError:
        raise FormatError("malformed header: non-numeric dimensions") from None
    if width <= 0 or height <= 0:
        raise FormatError("malformed header: dimensions must be positive")
    return width, height


def load_gray(path) -> np.ndarray:
    """Load a binary PGM (P5, maxval 255) file as a 2-D uint8 array."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] != b"P5":
        raise FormatError(f"{path}: not a binary PGM (P5) file")
    (wtok, htok, mtok), offset = _read_tokens(data, 3, 2)
    width, height = _parse_dims(wtok, htok)
    try:
        maxval = int(mtok)
    except ValueError:
        raise FormatError(f"{path}: malformed header: non-numeric maxval") from None
    if maxval != 255:
        raise FormatError(f"{path}: unsupported maxval {maxval} (must be 255)")
    payload = data[offset:]
    expected = width * height
    if len(payload) < expected:
        raise FormatError(
            f"{path}: truncated payload: {len(payload)} bytes, expected {expected}"
        )
    if len(payload) > expected:
        raise FormatError(f"{path}: trailing bytes after {expected}-byte payload")
    return np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy()


def store_gray(img, path) -> None:
    """Write a gray image as binary PGM (P5).  Round-trips bit-exactly."""
    arr = as_gray_image(img)
    height, width = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def load_watermark(path) -> np.ndarray:
    """Load a PBM bitmap (P4 packed or P1 ASCII); bit 1 is foreground."""
    with open(path, "rb") as fh:
        data = fh.read()
    magic = data[:2]
    if magic == b"P4":
        (wtok, htok), offset = _read_tokens(data, 2, 2)
        width, height = _parse_dims(wtok, htok)
        row_bytes = (width + 7) // 8
        payload = data[offset:]
        expected = row_bytes * height
        if len(payload) != expected:
            raise FormatError(
                f"{path}: P4 payload is {len(payload)} bytes, expected "
                f"{expected} ({row_bytes} bytes per padded row)"
            )
        rows = np.frombuffer(payload, dtype=np.uint8).reshape(height, row_bytes)
        bits = np.unpackbits(rows, axis=1)[:, :width]
        return bits.astype(np.uint8)
    if magic == b"P1":
        # strip comments, then tokenize; P1 bits may run together ("0101")
        lines = [line.split(b"#", 1)[0] for line in data[2:].splitlines()]
        tokens = b" ".join(lines).split()
        if len(tokens) < 2:
            raise FormatError(f"{path}: malformed P1 header")
        width, height = _parse_dims(tokens[0], tokens[1])
        digits = b"".join(tokens[2:])
        if len(digits) != width * height:
            raise FormatError(
                f"{path}: P1 has {len(digits)} bits, expected {width * height}"
            )
        if digits.strip(b"01"):
            raise FormatError(f"{path}: P1 contains characters other than 0/1")
        bits = np.frombuffer(digits, dtype=np.uint8) - ord(b"0")
        return bits.reshape(height, width).astype(np.uint8)
    raise FormatError(f"{path}: not a PBM (P4/P1) file")


def store_watermark(wm, path) -> None:
    """Write a binary watermark as packed PBM (P4) with zeroed pad bits."""
    bits = as_watermark(wm)
    height, width = bits.shape
    packed = np.packbits(bits, axis=1)
    with open(path, "wb") as fh:
        fh.write(f"P4\n{width} {height}\n".encode("ascii"))
        fh.write(packed.tobytes())
