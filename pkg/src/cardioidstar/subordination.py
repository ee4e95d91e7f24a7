"""Numerical subordination checks against the cardioid region.

A candidate boundary function q is subordinate at scale rho when the sampled
image of the circle |z| = rho stays inside the region; sharpness of a radius
constant is certified by boundary contact of the extremal image at the
radius plus an actual escape just beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geometry, kernels
from .radii import RadiusQuery, extremal_map, solve_radius

CONTACT_TOL = 1e-6      # absolute w-plane tolerance for boundary contact
ESCAPE_TOL = 1e-9       # clearance must drop below -ESCAPE_TOL to count as escape


@dataclass(frozen=True)
class BoundarySampler:
    """Samples q on the circle of radius rho: values are q(rho * e^{i theta})."""

    func: object
    rho: float
    samples: int = 512

    def __post_init__(self):
        if not 0.0 < self.rho <= 1.0:
            raise ValueError("rho must lie in (0, 1]")
        if self.samples < 512:
            raise ValueError("need at least 512 boundary samples")

    def angles(self) -> np.ndarray:
        return np.linspace(-math.pi, math.pi, self.samples, endpoint=False)

    def values(self, scale: float | None = None) -> np.ndarray:
        rho = self.rho if scale is None else scale
        z = rho * np.exp(1j * self.angles())
        return np.asarray(self.func(z), dtype=complex)


def min_clearance(points: np.ndarray) -> float:
    pts = np.asarray(points, dtype=complex)
    return float(kernels.clearance(pts.real, pts.imag).min())


def subordinate_to_cardioid(sampler: BoundarySampler, margin: float = 0.0) -> bool:
    """True when every sampled image point clears the boundary by `margin`.

    margin < 0 permits closure contact up to |margin|.  The candidate must
    fix the centre value 1 at scale 0.
    """
    center = complex(np.asarray(sampler.func(np.array([0.0 + 0.0j])), dtype=complex).ravel()[0])
    if abs(center - 1.0) > 1e-9:
        raise ValueError("candidate must satisfy q(0) = 1")
    if not geometry.contains(1.0):
        return False
    return min_clearance(sampler.values()) >= margin


@dataclass(frozen=True)
class SharpnessReport:
    supported: bool
    contact_ok: bool
    violation_ok: bool
    contact_clearance: float | None = None
    violation_clearance: float | None = None
    radius: float | None = None


def radius_sharpness(query: RadiusQuery, epsilon: float = 1e-3,
                     samples: int = 4096) -> SharpnessReport:
    """Certify a catalog radius by extremal boundary contact and escape.

    contact_ok: at the computed radius the extremal image touches the region
    boundary within CONTACT_TOL (for most entries at the real point 1 - 1/e).
    violation_ok: at radius*(1+epsilon) some sampled image point leaves the
    closed region.  Entries without a boundary-contact extremal (the
    convexity radii, order/bound/argument radii of the class itself) are
    reported unsupported.
    """
    if not 0.0 < epsilon <= 1e-2:
        raise ValueError("epsilon must lie in (0, 1e-2]")
    qmap = extremal_map(query.name, query.params)
    if qmap is None:
        return SharpnessReport(supported=False, contact_ok=False, violation_ok=False)
    result = solve_radius(query)
    th = np.linspace(-math.pi, math.pi, samples, endpoint=False)
    at_radius = qmap(result.value * np.exp(1j * th))
    beyond = qmap(min(1.0, result.value * (1.0 + epsilon)) * np.exp(1j * th))
    c0 = min_clearance(at_radius)
    c1 = min_clearance(beyond)
    return SharpnessReport(
        supported=True,
        contact_ok=abs(c0) <= CONTACT_TOL,
        violation_ok=c1 < -ESCAPE_TOL,
        contact_clearance=c0,
        violation_clearance=c1,
        radius=result.value,
    )


def cardioid_min_re(r: float, grid: int = 2048) -> float:
    """min over theta of Re(1 + z e^z) on |z| = r (monotone decreasing in r)."""
    th = np.linspace(0.0, math.pi, grid + 1)
    z = r * np.exp(1j * th)
    vals = (1.0 + z * np.exp(z)).real
    i = int(np.argmin(vals))
    lo, hi = th[max(i - 1, 0)], th[min(i + 1, grid)]
    # golden-section polish of the grid minimum
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = float(lo), float(hi)
    f = lambda t: (1.0 + r * np.exp(1j * t) * np.exp(r * np.exp(1j * t))).real
    c, d = b - inv * (b - a), a + inv * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(60):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = f(d)
    return float(min(vals[i], fc, fd))


def sharp_radius_oracle(min_re_of_image, alpha: float, tol: float = 1e-8) -> float:
    """sup{r : min_re_of_image(r) >= alpha} by bisection on (0, 1).

    Saturates to 0.0 or 1.0 when alpha is outside the reachable range.
    """
    if min_re_of_image(1.0 - 1e-12) >= alpha:
        return 1.0
    if min_re_of_image(tol) < alpha:
        return 0.0
    lo, hi = tol, 1.0 - 1e-12
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if min_re_of_image(mid) >= alpha:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
