"""Bend and dewarp raster images along columns with a flatten map, plus PGM/PPM I/O.

The leaf cross-section runs along image columns; rows are resampled
horizontally and independently. Pixel ``j`` of a width-``W`` image covers
the normalised coordinate interval ``[j/W, (j+1)/W]`` with its centre at
``(j + 0.5)/W``, on both the source and output side.
"""

import re
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, FormatError

__all__ = [
    "FILL",
    "RasterImage",
    "ResampleMode",
    "read_pnm",
    "write_pnm",
    "read_pgm",
    "write_pgm",
    "resample_columns",
    "dewarp_image",
    "bend_image",
]

FILL = 255


class ResampleMode(str, Enum):
    NEAREST = "nearest"
    LINEAR = "linear"


@dataclass(frozen=True, eq=False)
class RasterImage:
    """8-bit image stored as a (height, width, channels) uint8 array."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim == 2:
            px = px[:, :, None]
        if px.ndim != 3 or px.shape[2] not in (1, 3):
            raise DomainError(f"expected (h, w[, 1|3]) pixels, got shape {np.shape(self.pixels)}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise DomainError("image must be at least 1x1")
        if px.dtype != np.uint8:
            raise DomainError(f"pixels must be uint8, got {px.dtype}")
        px = np.ascontiguousarray(px)
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_bytes(cls, width, height, channels, data):
        if len(data) != width * height * channels:
            raise DomainError(
                f"expected {width * height * channels} bytes, got {len(data)}"
            )
        arr = np.frombuffer(bytes(data), dtype=np.uint8).reshape(height, width, channels)
        return cls(arr)

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def channels(self):
        return self.pixels.shape[2]

    @property
    def data(self):
        """Row-major sample bytes."""
        return self.pixels.tobytes()

    def __eq__(self, other):
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels
        )


# -- netpbm I/O ---------------------------------------------------------------

_MAGIC = {b"P5": 1, b"P6": 3}
_TOKEN = re.compile(rb"\s*(?:#[^\n]*\n\s*)*(\S+)")


def read_pnm(buf):
    """Parse binary PGM (P5) or PPM (P6) bytes with maxval 255."""
    buf = bytes(buf)
    pos = 0
    tokens = []
    for _ in range(4):
        match = _TOKEN.match(buf, pos)
        if match is None:
            raise FormatError("truncated netpbm header")
        tokens.append(match.group(1))
        pos = match.end()
    magic, w, h, maxval = tokens
    if magic not in _MAGIC:
        raise FormatError(f"unsupported netpbm variant {magic[:2]!r}; need P5 or P6")
    try:
        width, height, maxval = int(w), int(h), int(maxval)
    except ValueError:
        raise FormatError("non-numeric netpbm header field") from None
    if width < 1 or height < 1:
        raise FormatError(f"bad image size {width}x{height}")
    if maxval != 255:
        raise FormatError(f"maxval must be 255, got {maxval}")
    if pos >= len(buf) or not buf[pos : pos + 1].isspace():
        raise FormatError("missing whitespace after maxval")
    pos += 1
    channels = _MAGIC[magic]
    size = width * height * channels
    payload = buf[pos : pos + size]
    if len(payload) != size:
        raise FormatError(f"truncated payload: expected {size} bytes, got {len(payload)}")
    return RasterImage.from_bytes(width, height, channels, payload)


def write_pnm(img):
    magic = b"P5" if img.channels == 1 else b"P6"
    header = magic + b"\n%d %d\n255\n" % (img.width, img.height)
    return header + img.data


def read_pgm(buf):
    img = read_pnm(buf)
    if img.channels != 1:
        raise FormatError("expected a P5 (grayscale) file")
    return img


def write_pgm(img):
    if img.channels != 1:
        raise DomainError("PGM output needs a single-channel image")
    return write_pnm(img)


# -- resampling -----------------------------------------------------------------


def resample_columns(img, positions, mode=ResampleMode.LINEAR):
    """Build an image whose column ``j`` samples ``img`` at column ``positions[j]``.

    Positions are in source pixel units (pixel centres at integers). Positions
    beyond half a pixel outside the image are filled white.
    """
    mode = ResampleMode(mode)
    pos = np.asarray(positions, dtype=float)
    src = img.pixels
    w = img.width
    outside = ~np.isfinite(pos) | (pos < -0.5) | (pos > w - 0.5)
    p = np.clip(np.where(outside, 0.0, pos), 0.0, w - 1)
    if mode is ResampleMode.NEAREST:
        idx = np.minimum(np.floor(p + 0.5).astype(np.intp), w - 1)
        out = src[:, idx, :]
    else:
        i0 = np.floor(p).astype(np.intp)
        i1 = np.minimum(i0 + 1, w - 1)
        f = (p - i0)[None, :, None]
        vals = src[:, i0, :] * (1.0 - f) + src[:, i1, :] * f
        out = np.clip(np.rint(vals), 0, 255).astype(np.uint8)
    out = np.array(out, dtype=np.uint8)
    out[:, outside, :] = FILL
    return RasterImage(out)


def _check_width(out_width):
    if int(out_width) != out_width or out_width < 1:
        raise DomainError(f"out_width must be a positive integer, got {out_width!r}")
    return int(out_width)


def _centres(n):
    return (np.arange(n) + 0.5) / n


def dewarp_image(img, fmap, mode=ResampleMode.LINEAR, out_width=None):
    """Flatten a bent image: output column ``j`` shows flat coordinate s_j.

    s_j runs over the map's s-range at pixel centres; its curved coordinate
    F(s_j), normalised over the u-range, selects the source column.
    """
    out_width = _check_width(img.width if out_width is None else out_width)
    e, l = fmap.s_range
    u_lo, u_hi = fmap.u_range
    s = e + _centres(out_width) * (l - e)
    nu = (np.asarray(fmap.forward(s)) - u_lo) / (u_hi - u_lo)
    return resample_columns(img, nu * img.width - 0.5, mode)


def bend_image(img, fmap, mode=ResampleMode.LINEAR, out_width=None):
    """Bend a flat image: output column ``j`` shows curved coordinate u_j."""
    out_width = _check_width(img.width if out_width is None else out_width)
    e, l = fmap.s_range
    u_lo, u_hi = fmap.u_range
    u = u_lo + _centres(out_width) * (u_hi - u_lo)
    sigma = (np.asarray(fmap.inverse(u)) - e) / (l - e)
    return resample_columns(img, sigma * img.width - 0.5, mode)
