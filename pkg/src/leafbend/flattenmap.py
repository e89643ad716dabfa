"""Lookup table between flat arc length ``s`` and curved projected coordinate ``u``.

``u`` is the x-coordinate of the stretched profile. Queries interpolate
linearly between knots, so ``forward`` and ``inverse`` are exact inverses of
each other (up to roundoff) and exact at the knots.
"""

import io
import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .bentframe import build_profile, stretch_weight, axial_frame, _rigid
from .curves import Cornu, SampledCurve, ShiftedEuler, SpiralParams, WeightMode, spiral_point
from .errors import DomainError, FormatError, LeafBendError, NonMonotoneError, OutOfDomainError
from .specfun import DEFAULT_TOL

__all__ = [
    "MIN_KNOTS",
    "FlattenMap",
    "FitGrid",
    "FitResult",
    "build_map",
    "monotone_runs",
    "longest_monotone_range",
    "forward",
    "inverse",
    "fit_params",
]

MIN_KNOTS = 8


@dataclass(frozen=True, eq=False)
class FlattenMap:
    """Monotone knot table; ``direction`` is +1 if u increases with s, else -1."""

    s: np.ndarray
    u: np.ndarray
    direction: int = field(init=False)

    def __post_init__(self):
        s = np.array(self.s, dtype=float)
        u = np.array(self.u, dtype=float)
        if s.ndim != 1 or s.shape != u.shape:
            raise DomainError("knot arrays must be 1-D and equally long")
        if len(s) < MIN_KNOTS:
            raise DomainError(f"a flatten map needs at least {MIN_KNOTS} knots, got {len(s)}")
        if not (np.all(np.isfinite(s)) and np.all(np.isfinite(u))):
            raise DomainError("non-finite knot")
        if np.any(np.diff(s) <= 0):
            raise DomainError("knots must be strictly increasing in s")
        _check_monotone(s, u)
        s.flags.writeable = False
        u.flags.writeable = False
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "direction", 1 if u[-1] > u[0] else -1)

    def __len__(self):
        return len(self.s)

    @property
    def s_range(self):
        return float(self.s[0]), float(self.s[-1])

    @property
    def u_range(self):
        return float(self.u.min()), float(self.u.max())

    def forward(self, s):
        """u = F(s)."""
        s_arr = np.asarray(s, dtype=float)
        lo, hi = self.s_range
        if np.any(~np.isfinite(s_arr)) or np.any(s_arr < lo) or np.any(s_arr > hi):
            raise OutOfDomainError(s, (lo, hi))
        out = np.interp(s_arr, self.s, self.u)
        return float(out) if out.ndim == 0 else out

    def inverse(self, u):
        """s = F^-1(u)."""
        u_arr = np.asarray(u, dtype=float)
        lo, hi = self.u_range
        if np.any(~np.isfinite(u_arr)) or np.any(u_arr < lo) or np.any(u_arr > hi):
            raise OutOfDomainError(u, (lo, hi))
        if self.direction > 0:
            out = np.interp(u_arr, self.u, self.s)
        else:
            out = np.interp(u_arr, self.u[::-1], self.s[::-1])
        return float(out) if out.ndim == 0 else out

    def to_csv(self):
        buf = io.StringIO()
        buf.write("s,u\n")
        for s, u in zip(self.s, self.u):
            buf.write(f"{s:.9g},{u:.9g}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text):
        lines = text.splitlines()
        if not lines or lines[0].strip() != "s,u":
            raise FormatError("flatten map CSV must start with header 's,u'")
        try:
            rows = [tuple(float(v) for v in line.split(",")) for line in lines[1:] if line.strip()]
        except ValueError as exc:
            raise FormatError(f"bad number in flatten map CSV: {exc}") from None
        if any(len(r) != 2 for r in rows):
            raise FormatError("flatten map CSV rows must have exactly two fields")
        arr = np.array(rows, dtype=float).reshape(-1, 2)
        return cls(arr[:, 0], arr[:, 1])


def _check_monotone(s, u):
    d = np.diff(u)
    if d[0] == 0:
        raise NonMonotoneError((s[0], s[1]))
    sign = np.sign(d[0])
    bad = np.nonzero(np.sign(d) != sign)[0]
    if len(bad):
        i = bad[0]
        raise NonMonotoneError((s[i], s[i + 1]))


def forward(fmap, s):
    return fmap.forward(s)


def inverse(fmap, u):
    return fmap.inverse(u)


def build_map(profile, s_range=None):
    """Tabulate (s, stretched x) knots from a profile.

    ``s_range`` restricts the table to samples with ``s_range[0] <= s <=
    s_range[1]``, e.g. the interval from :func:`longest_monotone_range`. Raises
    :class:`NonMonotoneError` if the projection folds inside the range.
    """
    s = profile.s
    u = profile.stretched[:, 0]
    if s_range is not None:
        keep = (s >= s_range[0]) & (s <= s_range[1])
        s, u = s[keep], u[keep]
    if len(s) < MIN_KNOTS:
        raise DomainError(f"a flatten map needs at least {MIN_KNOTS} knots, got {len(s)}")
    return FlattenMap(s, u)


def monotone_runs(profile):
    """Maximal index spans ``(i, j)`` (inclusive) over which u is strictly monotone."""
    sign = np.sign(np.diff(profile.stretched[:, 0]))
    runs = []
    start = 0
    for i in range(1, len(sign)):
        if sign[i] != sign[start] or sign[i] == 0:
            runs.append((start, i))
            start = i
    runs.append((start, len(sign)))
    return [(i, j) for i, j in runs if sign[i] != 0]


def longest_monotone_range(profile):
    """Arc-length interval of the longest monotone run (earliest on ties)."""
    i, j = max(monotone_runs(profile), key=lambda r: (r[1] - r[0], -r[0]))
    return float(profile.s[i]), float(profile.s[j])


# -- parameter fitting ------------------------------------------------------

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FitGrid:
    """Coarse search axes. ``m`` is only searched with ``ShiftedEuler`` phase."""

    l: Sequence[float] = tuple(np.linspace(1.5, 3.0, 7))
    e: Sequence[float] = tuple(np.linspace(-1.5, 0.5, 9))
    lam: Sequence[float] = tuple(np.linspace(0.0, 3.0, 7))
    m: Optional[Sequence[float]] = None


@dataclass(frozen=True)
class FitResult:
    params: SpiralParams
    rms_residual: float
    iterations: int


def _arc_fractions(curve, arc):
    if arc == "param":
        s = curve.s
        return (s - s[0]) / (s[-1] - s[0])
    if arc == "chord":
        seg = np.hypot(*np.diff(curve.points, axis=0).T)
        cum = np.concatenate([[0.0], np.cumsum(seg)])
        if cum[-1] <= 0:
            raise DomainError("observed polyline has zero length")
        return cum / cum[-1]
    raise DomainError(f"arc must be 'param' or 'chord', got {arc!r}")


class _Objective:
    def __init__(self, observed, frac, arc, phase_kind, weight, n_dense, tol):
        self.obs = observed.points
        self.frac = frac
        self.arc = arc
        self.phase_kind = phase_kind
        self.weight = weight
        self.n_dense = n_dense
        self.tol = tol

    def params(self, x):
        l, e, lam = x[:3]
        phase = ShiftedEuler(x[3]) if self.phase_kind is ShiftedEuler else Cornu()
        return SpiralParams(phase, e, l, lam, self.weight)

    def __call__(self, x):
        l, e, lam = x[:3]
        if not (e < l) or lam < 0:
            return math.inf
        try:
            params = self.params(x)
            if self.arc == "param":
                frame = axial_frame(params, self.tol)
                t = e + self.frac * (l - e)
                p = _rigid(np.asarray(spiral_point(t, params.phase, self.tol)), frame)
                cand = p * np.asarray(stretch_weight(t, params))[:, None]
            else:
                prof = build_profile(params, self.n_dense, self.tol)
                seg = np.hypot(*np.diff(prof.stretched, axis=0).T)
                cum = np.concatenate([[0.0], np.cumsum(seg)])
                if cum[-1] <= 0:
                    return math.inf
                cum /= cum[-1]
                cand = np.column_stack(
                    [np.interp(self.frac, cum, prof.stretched[:, i]) for i in (0, 1)]
                )
        except LeafBendError:
            return math.inf
        return float(np.sqrt(np.mean(np.sum((cand - self.obs) ** 2, axis=1))))


def _golden(f, x, i, lo, hi, fx, xtol):
    """Minimise f along coordinate i on [lo, hi]; return (x, fx) no worse than input."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)

    def at(v):
        y = list(x)
        y[i] = v
        return f(y), y

    fc, yc = at(c)
    fd, yd = at(d)
    while b - a > xtol:
        if fc <= fd:
            b, d, fd, yd = d, c, fc, yc
            c = b - _INV_PHI * (b - a)
            fc, yc = at(c)
        else:
            a, c, fc, yc = c, d, fd, yd
            d = a + _INV_PHI * (b - a)
            fd, yd = at(d)
    best = min((fc, yc), (fd, yd), key=lambda r: r[0])
    if best[0] < fx:
        return best[1], best[0]
    return x, fx


def fit_params(
    observed,
    grid=None,
    tol=DEFAULT_TOL,
    *,
    phase=Cornu,
    weight=WeightMode.END,
    arc="param",
    max_sweeps=200,
    n_dense=2048,
):
    """Recover (l, e, lam[, m]) of a stretched profile polyline.

    A coarse grid search picks the starting cell; coordinate-wise
    golden-section sweeps then refine it, halving the bracket each sweep that
    fails to improve the residual, until the bracket is below ``tol``.

    ``arc="param"`` matches samples by the fraction of ``observed.s`` (model
    arc length); ``arc="chord"`` matches by fraction of cumulative chord
    length, resampling each candidate from ``n_dense`` samples.

    With ``phase=ShiftedEuler`` the fourth axis ``m`` is searched too. Only
    ``l - m`` and ``e - m`` are identifiable there: shifting arc length by c
    maps ShiftedEuler(m) on [e, l] to ShiftedEuler(m - c) on [e - c, l - c]
    up to a rigid motion, which the axial frame removes.
    """
    if len(observed) < 16:
        raise DomainError(f"need at least 16 observed samples, got {len(observed)}")
    grid = FitGrid() if grid is None else grid
    weight = WeightMode(weight)
    axes = [list(grid.l), list(grid.e), list(grid.lam)]
    if phase is ShiftedEuler:
        axes.append(list(grid.m) if grid.m is not None else [0.0])
    if any(len(a) == 0 for a in axes):
        raise DomainError("fit grid has an empty axis")

    frac = _arc_fractions(observed, arc)
    f = _Objective(observed, frac, arc, phase, weight, n_dense, tol)

    best_x, best_f = None, math.inf
    for x in itertools.product(*axes):
        x = [float(v) for v in x]
        fx = f(x)
        if fx < best_f:
            best_x, best_f = x, fx
    if best_x is None:
        raise DomainError("no admissible grid point (need e < l and lam >= 0)")

    steps = [_spacing(a) for a in axes]
    iterations = 0
    while iterations < max_sweeps and max(steps) > tol:
        iterations += 1
        start = list(best_x)
        for i in range(len(best_x)):
            lo, hi = best_x[i] - steps[i], best_x[i] + steps[i]
            if i == 2:
                lo = max(lo, 0.0)
            xtol = max(tol, 1e-3 * steps[i])
            best_x, best_f = _golden(f, best_x, i, lo, hi, best_f, xtol)
        moved = [abs(a - b) for a, b in zip(best_x, start)]
        # pattern move along the sweep's net displacement
        trial = [2.0 * a - b for a, b in zip(best_x, start)]
        ft = f(trial)
        if ft < best_f:
            best_x, best_f = trial, ft
        steps = [max(2.0 * mv, 0.25 * st) if mv < st else st for mv, st in zip(moved, steps)]

    if not math.isfinite(best_f):
        raise LeafBendError("fit residual is not finite")
    return FitResult(f.params(best_x), best_f, iterations)


def _spacing(axis):
    if len(axis) < 2:
        return 0.5
    return float(np.max(np.diff(sorted(axis))))
