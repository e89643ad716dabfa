"""Cross-section curve families: the generalised Euler spiral and the elastica.

Spiral coordinates are ``x = int cos(phi)``, ``y = int sin(phi)``, so every
spiral here is parameterised by arc length (unit speed).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Union

import numpy as np

from .errors import DomainError
from .specfun import (
    DEFAULT_TOL,
    Cornu,
    ShiftedEuler,
    jacobi_ellipj,
    jacobi_epsilon,
    phase_integral,
)

__all__ = [
    "Cornu",
    "ShiftedEuler",
    "PhaseKind",
    "WeightMode",
    "SpiralParams",
    "ElasticaParams",
    "Point2",
    "SampledCurve",
    "spiral_phase",
    "spiral_curvature",
    "spiral_point",
    "spiral_tangent",
    "elastica_point",
    "sample_spiral",
    "sample_elastica",
]

PhaseKind = Union[Cornu, ShiftedEuler]


class WeightMode(str, Enum):
    """Where the stretch exponent is anchored.

    END: w(t) = (l - t)**lam, vanishing at the axial end.
    ARC: w(t) = (t - e)**lam, vanishing at the free end.
    """

    END = "end"
    ARC = "arc"


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class SpiralParams:
    phase: PhaseKind = field(default_factory=Cornu)
    s_start: float = 0.0
    s_end: float = 1.0
    lam: float = 0.0
    weight: WeightMode = WeightMode.END

    def __post_init__(self):
        object.__setattr__(self, "weight", WeightMode(self.weight))
        vals = (self.s_start, self.s_end, self.lam)
        if not all(np.isfinite(v) for v in vals):
            raise DomainError(f"non-finite spiral parameters: {vals}")
        if not self.s_start < self.s_end:
            raise DomainError(
                f"s_start must be < s_end, got {self.s_start!r} >= {self.s_end!r}"
            )
        if self.lam < 0:
            raise DomainError(f"stretch exponent must be >= 0, got {self.lam!r}")

    @property
    def length(self):
        return self.s_end - self.s_start


@dataclass(frozen=True)
class ElasticaParams:
    k: float = 0.3
    s_start: float = 0.0
    s_end: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.k <= 1.0:
            raise DomainError(f"elliptic modulus k must lie in [0, 1], got {self.k!r}")
        if not (np.isfinite(self.s_start) and np.isfinite(self.s_end)):
            raise DomainError("non-finite elastica range")
        if not self.s_start < self.s_end:
            raise DomainError(
                f"s_start must be < s_end, got {self.s_start!r} >= {self.s_end!r}"
            )


@dataclass(frozen=True, eq=False)
class SampledCurve:
    """Ordered arc-length samples ``s`` (n,) with plane points ``points`` (n, 2)."""

    params: Union[SpiralParams, ElasticaParams, None]
    s: np.ndarray
    points: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        if len(s) < 2 or len(s) != len(pts):
            raise DomainError(
                f"need >= 2 samples with matching points, got {len(s)} s / {len(pts)} points"
            )
        if np.any(np.diff(s) <= 0):
            raise DomainError("sample arc lengths must be strictly increasing")
        if not np.all(np.isfinite(pts)):
            raise DomainError("non-finite sample point")
        s.flags.writeable = False
        pts.flags.writeable = False
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.s)

    @property
    def x(self):
        return self.points[:, 0]

    @property
    def y(self):
        return self.points[:, 1]


def spiral_phase(s, phase):
    """Tangent angle phi(s)."""
    return phase.phase(s)


def spiral_curvature(s, phase):
    """Curvature d(phi)/ds: ``2s`` for Cornu, ``m - s`` for ShiftedEuler."""
    return phase.curvature(s)


def spiral_point(s, phase, tol=DEFAULT_TOL):
    """Point at arc length ``s``: (int_0^s cos phi, int_0^s sin phi).

    Vectorised: array ``s`` yields an (n, 2) array instead of a Point2.
    """
    x = phase_integral(s, phase, "cos", tol)
    y = phase_integral(s, phase, "sin", tol)
    if np.ndim(x) == 0:
        return Point2(x, y)
    return np.column_stack([x, y])


def spiral_tangent(s, phase):
    phi = np.asarray(phase.phase(s), dtype=float)
    if phi.ndim == 0:
        return Point2(float(np.cos(phi)), float(np.sin(phi)))
    return np.column_stack([np.cos(phi), np.sin(phi)])


def elastica_point(s, params):
    """(2k cn(s, k), 2 eps(s, k) - s); ``k = 0`` is the straight rod (0, s)."""
    k = params.k if isinstance(params, ElasticaParams) else float(params)
    s_arr = np.asarray(s, dtype=float)
    cn = np.asarray(jacobi_ellipj(s_arr, k)[1])
    eps = np.asarray(jacobi_epsilon(s_arr, k))
    x = 2.0 * k * cn
    y = 2.0 * eps - s_arr
    if s_arr.ndim == 0:
        return Point2(float(x), float(y))
    return np.column_stack([x, y])


def _grid(s_start, s_end, n):
    if int(n) != n or n < 2:
        raise DomainError(f"need n >= 2 samples, got {n!r}")
    return np.linspace(s_start, s_end, int(n))


def sample_spiral(params, n=512, tol=DEFAULT_TOL):
    """Uniform-in-s samples of the unstretched spiral over [s_start, s_end]."""
    s = _grid(params.s_start, params.s_end, n)
    return SampledCurve(params, s, spiral_point(s, params.phase, tol))


def sample_elastica(params, n=512):
    s = _grid(params.s_start, params.s_end, n)
    return SampledCurve(params, s, elastica_point(s, params))
