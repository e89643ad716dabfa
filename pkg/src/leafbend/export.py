"""Curve CSV and minimal SVG polyline documents."""

import numpy as np

from .curves import SampledCurve
from .errors import FormatError

CURVE_DIGITS = 12


def _fmt(v, digits=CURVE_DIGITS):
    # repr-style formatting is locale independent; normalise negative zero
    return f"{v + 0.0:.{digits}g}"


def curve_csv(s, points):
    """``s,x,y`` CSV text, one sample per line."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    lines = ["s,x,y"]
    lines += [f"{_fmt(si)},{_fmt(x)},{_fmt(y)}" for si, (x, y) in zip(s, points)]
    return "\n".join(lines) + "\n"


def read_curve_csv(text):
    """Parse ``s,x,y`` or ``x,y`` CSV into a SampledCurve.

    Without an ``s`` column the arc length is the cumulative chord length.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty curve CSV")
    header = [h.strip() for h in lines[0].split(",")]
    if header not in (["s", "x", "y"], ["x", "y"]):
        raise FormatError(f"curve CSV header must be 's,x,y' or 'x,y', got {lines[0]!r}")
    try:
        rows = np.array(
            [[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float
        )
    except ValueError as exc:
        raise FormatError(f"bad number in curve CSV: {exc}") from None
    if rows.size == 0:
        rows = rows.reshape(0, len(header))
    if rows.ndim != 2 or rows.shape[1] != len(header):
        raise FormatError(f"every row needs {len(header)} fields")
    if not np.all(np.isfinite(rows)):
        raise FormatError("non-finite value in curve CSV")
    if header[0] == "s":
        s, pts = rows[:, 0], rows[:, 1:]
    else:
        pts = rows
        seg = np.hypot(*np.diff(pts, axis=0).T) if len(pts) > 1 else np.zeros(0)
        s = np.concatenate([[0.0], np.cumsum(seg)])
    return SampledCurve(None, s, pts)


def polyline_svg(points, margin=0.05, size=512, stroke="black"):
    """Single-polyline SVG with a viewBox fitted to the points plus ``margin``.

    The y axis is flipped so the curve appears in the usual math orientation.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    x, y = pts[:, 0], -pts[:, 1]
    xmin, xmax, ymin, ymax = x.min(), x.max(), y.min(), y.max()
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    pad = margin * span
    vb = (xmin - pad, ymin - pad, xmax - xmin + 2 * pad, ymax - ymin + 2 * pad)
    width_px = size
    height_px = max(1, round(size * vb[3] / vb[2]))
    coords = " ".join(f"{_fmt(a, 9)},{_fmt(b, 9)}" for a, b in zip(x, y))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
        f'viewBox="{" ".join(_fmt(v, 9) for v in vb)}">\n'
        f'  <polyline fill="none" stroke="{stroke}" stroke-width="{_fmt(span / 400, 6)}" '
        f'points="{coords}"/>\n'
        "</svg>\n"
    )
