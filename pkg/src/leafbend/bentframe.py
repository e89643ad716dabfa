"""Place the spiral's axial end at the origin and apply the lateral stretch.

The rigid stage maps a spiral point P(t) = (X, Y) to

    x' = c (X - X_l) + s_rot (Y - Y_l)
    y' = s_rot (X - X_l) - c (Y - Y_l)

with (c, s_rot) = (cos theta, sin theta) and theta the direction of the chord
from the axial end P(l) to the free end P(e). The axial end lands on the
origin and the free end on the positive x-axis. The map has determinant -1
(a rotation composed with a reflection), which is still an isometry.

The stretch stage multiplies both coordinates by a weight that vanishes at
one end of the leaf; see :class:`~leafbend.curves.WeightMode`.
"""

import math
from dataclasses import dataclass

import numpy as np

from .curves import Point2, SpiralParams, WeightMode, spiral_point
from .errors import DomainError, GeometryError
from .specfun import DEFAULT_TOL

__all__ = [
    "Frame",
    "BentProfile",
    "axial_frame",
    "stretch_weight",
    "transformed_point",
    "stretched_point",
    "build_profile",
]

_CHORD_MIN = 1e-12


@dataclass(frozen=True)
class Frame:
    """Rigid frame: rotation angle in (-pi, pi] and the pivot P(l)."""

    rotation: float
    pivot: Point2

    @property
    def cos(self):
        return math.cos(self.rotation)

    @property
    def sin(self):
        return math.sin(self.rotation)


def axial_frame(params, tol=DEFAULT_TOL):
    pm = spiral_point(params.s_end, params.phase, tol)
    pa = spiral_point(params.s_start, params.phase, tol)
    dx, dy = pa.x - pm.x, pa.y - pm.y
    if math.hypot(dx, dy) < _CHORD_MIN:
        raise GeometryError(
            f"degenerate chord between s={params.s_start!r} and s={params.s_end!r}"
        )
    theta = math.atan2(dy, dx)
    if theta <= -math.pi:
        theta = math.pi
    return Frame(theta, pm)


def _check_domain(t, params):
    t = np.asarray(t, dtype=float)
    slack = 1e-12 * max(1.0, abs(params.s_start), abs(params.s_end))
    if not np.all(np.isfinite(t)) or np.any(t < params.s_start - slack) or np.any(
        t > params.s_end + slack
    ):
        raise DomainError(
            f"t outside [{params.s_start!r}, {params.s_end!r}]"
        )
    return np.clip(t, params.s_start, params.s_end)


def stretch_weight(t, params):
    """w(t) = (l - t)**lam for END weighting, (t - e)**lam for ARC."""
    t = _check_domain(t, params)
    if params.weight is WeightMode.END:
        base = params.s_end - t
    else:
        base = t - params.s_start
    w = np.power(base, params.lam)
    return float(w) if w.ndim == 0 else w


def _rigid(xy, frame):
    c, s_rot = frame.cos, frame.sin
    dx = xy[..., 0] - frame.pivot.x
    dy = xy[..., 1] - frame.pivot.y
    return np.stack([c * dx + s_rot * dy, s_rot * dx - c * dy], axis=-1)


def transformed_point(t, params, frame=None, tol=DEFAULT_TOL):
    """Spiral point at ``t`` expressed in the axial frame."""
    if frame is None:
        frame = axial_frame(params, tol)
    t = _check_domain(t, params)
    p = np.asarray(spiral_point(t, params.phase, tol))
    out = _rigid(p, frame)
    if out.ndim == 1:
        return Point2(float(out[0]), float(out[1]))
    return out


def stretched_point(t, params, frame=None, tol=DEFAULT_TOL):
    """transformed_point(t) scaled by the stretch weight on both coordinates."""
    p = np.asarray(transformed_point(t, params, frame, tol))
    w = np.asarray(stretch_weight(t, params))
    out = p * w[..., None]
    if out.ndim == 1:
        return Point2(float(out[0]), float(out[1]))
    return out


@dataclass(frozen=True, eq=False)
class BentProfile:
    """Samples of the bent leaf: arc length ``s`` with ``transformed`` and
    ``stretched`` (n, 2) arrays."""

    params: SpiralParams
    frame: Frame
    s: np.ndarray
    transformed: np.ndarray
    stretched: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.s) <= 0):
            raise DomainError("profile samples must be strictly increasing in s")
        for arr in (self.s, self.transformed, self.stretched):
            arr.flags.writeable = False

    def __len__(self):
        return len(self.s)


def build_profile(params, n=2048, tol=DEFAULT_TOL):
    """Sample the bent, stretched leaf uniformly in arc length over [e, l]."""
    if int(n) != n or n < 2:
        raise DomainError(f"need n >= 2 samples, got {n!r}")
    frame = axial_frame(params, tol)
    s = np.linspace(params.s_start, params.s_end, int(n))
    transformed = _rigid(np.asarray(spiral_point(s, params.phase, tol)), frame)
    w = np.asarray(stretch_weight(s, params))
    stretched = transformed * w[:, None]
    return BentProfile(params, frame, s, transformed, stretched)
