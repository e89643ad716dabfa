"""Special functions: Fresnel-type phase integrals and Jacobi elliptic functions.

Fresnel integrals here use the unnormalised convention

    C(t) = int_0^t cos(u**2) du,    S(t) = int_0^t sin(u**2) du,

i.e. *without* the pi/2 factor found in most libraries.

Jacobi functions take the **modulus** ``k`` (not the parameter ``m = k**2``).
This matches the classical elastica written as ``(2k cn(s, k), 2 eps(s, k) - s)``.

All functions accept scalars or array-likes and return a float for scalar
input, an ndarray otherwise.
"""

from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import DomainError

__all__ = [
    "DEFAULT_TOL",
    "Cornu",
    "ShiftedEuler",
    "fresnel_c",
    "fresnel_s",
    "phase_integral",
    "jacobi_ellipj",
    "jacobi_sn",
    "jacobi_cn",
    "jacobi_dn",
    "jacobi_am",
    "jacobi_epsilon",
]

DEFAULT_TOL = 1e-10

_SQRT_HALF_PI = np.sqrt(np.pi / 2.0)
_SQRT2 = np.sqrt(2.0)
_AGM_MAX_ITER = 64


def _finite(t, name="t"):
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite, got {t!r}")
    return arr


def _check_tol(tol):
    if not (tol > 0 and np.isfinite(tol)):
        raise DomainError(f"tolerance must be a positive finite number, got {tol!r}")


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def _modulus(k):
    k = float(k)
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"elliptic modulus k must lie in [0, 1], got {k!r}")
    return k


# -- Fresnel-type integrals ------------------------------------------------


def _fresnel_cs(t):
    # scipy: int_0^z cos(pi v^2 / 2) dv; substitute u = sqrt(pi/2) v.
    s_std, c_std = special.fresnel(t / _SQRT_HALF_PI)
    return _SQRT_HALF_PI * c_std, _SQRT_HALF_PI * s_std


def fresnel_c(t, tol=DEFAULT_TOL):
    """C(t) = int_0^t cos(u^2) du.

    Accurate to a few ulps, so any ``tol`` above ~1e-14 is honoured.
    """
    _check_tol(tol)
    return _out(_fresnel_cs(_finite(t))[0])


def fresnel_s(t, tol=DEFAULT_TOL):
    """S(t) = int_0^t sin(u^2) du."""
    _check_tol(tol)
    return _out(_fresnel_cs(_finite(t))[1])


# -- phase functions -------------------------------------------------------


@dataclass(frozen=True)
class Cornu:
    """Cornu spiral phase, phi(u) = u**2, curvature 2u."""

    def phase(self, s):
        s = np.asarray(s, dtype=float)
        return _out(s * s)

    def curvature(self, s):
        return _out(2.0 * np.asarray(s, dtype=float))

    def integrals(self, t):
        """Return ``(int_0^t cos phi, int_0^t sin phi)``."""
        return _fresnel_cs(t)


@dataclass(frozen=True)
class ShiftedEuler:
    """Euler spiral anchored at the axial end: phi(u) = m*u - u**2/2.

    The curvature ``m - u`` equals ``m`` at ``u = 0`` and vanishes at ``u = m``.
    """

    m: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.m):
            raise DomainError(f"m must be finite, got {self.m!r}")

    def phase(self, s):
        s = np.asarray(s, dtype=float)
        return _out(self.m * s - 0.5 * s * s)

    def curvature(self, s):
        return _out(self.m - np.asarray(s, dtype=float))

    def integrals(self, t):
        # m u - u^2/2 = a - w^2 with a = m^2/2, w = (u - m)/sqrt(2)
        a = 0.5 * self.m * self.m
        c1, s1 = _fresnel_cs((t - self.m) / _SQRT2)
        c0, s0 = _fresnel_cs(-self.m / _SQRT2)
        dc, ds = c1 - c0, s1 - s0
        ca, sa = np.cos(a), np.sin(a)
        return _SQRT2 * (ca * dc + sa * ds), _SQRT2 * (sa * dc - ca * ds)


def phase_integral(t, phase, trig, tol=DEFAULT_TOL):
    """int_0^t cos(phi(u)) du or int_0^t sin(phi(u)) du for a phase kind.

    ``trig`` is ``"cos"`` or ``"sin"``. Evaluated in closed form through the
    Fresnel integrals (completing the square for :class:`ShiftedEuler`).
    """
    _check_tol(tol)
    t = _finite(t)
    if trig == "cos":
        return _out(phase.integrals(t)[0])
    if trig == "sin":
        return _out(phase.integrals(t)[1])
    raise DomainError(f"trig must be 'cos' or 'sin', got {trig!r}")


# -- Jacobi elliptic functions ---------------------------------------------


def jacobi_ellipj(u, k):
    """Return ``(sn, cn, dn, am)`` at modulus ``k`` via the AGM / descending Landen scheme.

    The amplitude is continuous in ``u`` (not reduced to a principal branch),
    which is what the incomplete integral of the second kind needs.
    """
    k = _modulus(k)
    u = _finite(u, "u")

    if k == 1.0:
        sech = 1.0 / np.cosh(u)
        am = 2.0 * np.arctan(np.tanh(0.5 * u))
        return _out(np.tanh(u)), _out(sech), _out(sech), _out(am)

    a = [1.0]
    c = [k]
    b = np.sqrt((1.0 - k) * (1.0 + k))
    eps = np.finfo(float).eps
    while abs(c[-1]) > eps * a[-1]:
        if len(a) > _AGM_MAX_ITER:
            raise DomainError(f"AGM failed to converge for k={k!r}")
        a_prev = a[-1]
        a.append(0.5 * (a_prev + b))
        c.append(0.5 * (a_prev - b))
        b = np.sqrt(a_prev * b)

    n = len(a) - 1
    phi = (2.0**n) * a[n] * u
    phi_next = phi
    for j in range(n, 0, -1):
        phi_next = phi
        phi = 0.5 * (phi + np.arcsin(c[j] / a[j] * np.sin(phi)))

    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = cn / np.cos(phi_next - phi) if n > 0 else np.ones_like(phi)
    return _out(sn), _out(cn), _out(dn), _out(phi)


def jacobi_sn(u, k):
    return jacobi_ellipj(u, k)[0]


def jacobi_cn(u, k):
    """cn(u, k) with ``k`` the modulus; cn(u, 0) = cos u, cn(u, 1) = sech u."""
    return jacobi_ellipj(u, k)[1]


def jacobi_dn(u, k):
    return jacobi_ellipj(u, k)[2]


def jacobi_am(u, k):
    return jacobi_ellipj(u, k)[3]


def jacobi_epsilon(u, k):
    """Jacobi epsilon function eps(u, k) = int_0^u dn(v, k)^2 dv.

    Computed as E(am(u, k) | k^2), the incomplete integral of the second kind
    at the (unwrapped) amplitude.
    """
    k = _modulus(k)
    u = _finite(u, "u")
    if k == 0.0:
        return _out(u.copy())
    if k == 1.0:
        return _out(np.tanh(u))
    am = np.asarray(jacobi_ellipj(u, k)[3])
    return _out(special.ellipeinc(am, k * k))
