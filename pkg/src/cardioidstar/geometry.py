"""Exact geometry of the cardioid region: the image of the unit disk under
w = 1 + z*exp(z).

The boundary point at angle theta is 1 + e^{cos t}(cos(t+sin t) + i sin(t+sin t)),
so in polar form about the centre 1 the radius is e^{cos t} and the polar
angle is psi(t) = t + sin(t), strictly increasing on [0, pi].  Membership
therefore reduces to one monotone root solve, which is what `contains` does;
a winding-number test over the sampled boundary lives in the test suite as an
independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .solve import Bracket, find_root, find_all_roots, maximize_1d

E = math.e
REAL_TRACE = (1.0 - 1.0 / E, 1.0 + E)  # real-axis extent of the region
INNER_BRANCH_POINT = 1.0 + (E - 1.0 / E) / 2.0  # centre of the largest inscribed disk
OUTER_BRANCH_POINT = (E + 1.0 / E) / 2.0        # centre of the smallest circumscribed disk


def boundary_point(theta: float) -> complex:
    """Boundary of the region at parameter theta (radians)."""
    r = math.exp(math.cos(theta))
    a = theta + math.sin(theta)
    return complex(1.0 + r * math.cos(a), r * math.sin(a))


def boundary_curve(samples: int = 4096, closed: bool = True) -> np.ndarray:
    """Boundary samples over theta in [-pi, pi]; closed repeats the first point."""
    th = np.linspace(-math.pi, math.pi, samples + 1 if closed else samples)
    rad = np.exp(np.cos(th))
    ang = th + np.sin(th)
    return 1.0 + rad * np.cos(ang) + 1j * rad * np.sin(ang)


def psi(theta):
    return theta + np.sin(theta)


def psi_inverse(phi: float) -> float:
    """The unique theta in [0, pi] with theta + sin(theta) = phi."""
    if not 0.0 <= phi <= math.pi:
        raise ValueError("phi must lie in [0, pi]")
    return float(kernels.psi_invert(np.array([phi]))[0])


def clearance(w: complex) -> float:
    """Signed distance budget of w along its ray from 1: positive inside."""
    w = complex(w)
    return float(kernels.clearance(np.array([w.real]), np.array([w.imag]))[0])


def contains(w: complex, margin: float = 0.0) -> bool:
    """Membership of w in the region, demanding `margin` of radial clearance.

    margin > 0 asks for strict interior depth; a small negative margin admits
    points within |margin| of the boundary (closure checks).
    """
    return clearance(complex(w)) >= margin


def contains_batch(points, margin: float = 0.0) -> np.ndarray:
    pts = np.asarray(points, dtype=complex)
    return kernels.clearance(pts.real, pts.imag) >= margin


@dataclass(frozen=True)
class FunctionBounds:
    min_re: float
    max_re: float
    max_im: float
    max_arg: float      # radians
    theta_re: float     # maximiser of -Re, root of 3t/2 + sin t = pi
    theta_im: float     # maximiser of Im, root of 3t/2 + sin t = pi/2


def _re_profile(theta: float) -> float:
    return 1.0 + math.exp(math.cos(theta)) * math.cos(theta + math.sin(theta))


def _im_profile(theta: float) -> float:
    return math.exp(math.cos(theta)) * math.sin(theta + math.sin(theta))


@lru_cache(maxsize=1)
def function_bounds() -> FunctionBounds:
    """Sharp real/imaginary/argument extremes of the region."""
    theta_re = find_root(lambda t: 1.5 * t + math.sin(t) - math.pi,
                         Bracket.from_function(lambda t: 1.5 * t + math.sin(t) - math.pi, 0.0, math.pi)).x
    theta_im = find_root(lambda t: 1.5 * t + math.sin(t) - math.pi / 2.0,
                         Bracket.from_function(lambda t: 1.5 * t + math.sin(t) - math.pi / 2.0, 0.0, math.pi)).x
    arg = maximize_1d(lambda t: math.atan2(_im_profile(t), _re_profile(t)),
                      (0.0, math.pi), grid=4096, refine_tol=1e-12)
    return FunctionBounds(
        min_re=_re_profile(theta_re),
        max_re=1.0 + E,
        max_im=_im_profile(theta_im),
        max_arg=arg.value,
        theta_re=theta_re,
        theta_im=theta_im,
    )


def modulus_bound(r: float) -> float:
    """Upper bound 1 + r e^r for |w| on the image of |z| <= r."""
    if not 0.0 < r <= 1.0:
        raise ValueError("r must lie in (0, 1]")
    return 1.0 + r * math.exp(r)


@dataclass(frozen=True)
class DiskFit:
    radius: float
    theta_a: float | None  # interior stationary angle of the distance profile, if any


def _distance_sq(theta: float, a: float) -> float:
    ec = math.exp(math.cos(theta))
    return ec * ec - 2.0 * (a - 1.0) * ec * math.cos(theta + math.sin(theta)) + (a - 1.0) ** 2


def _stationary_angle(a: float, pick_max: bool) -> float | None:
    # interior critical points of the squared distance from (a, 0) to the
    # boundary satisfy e^{cos t} sin(t/2) = (a-1) sin(3t/2 + sin t)
    def eq(t: float) -> float:
        return math.exp(math.cos(t)) * math.sin(t / 2.0) - (a - 1.0) * math.sin(1.5 * t + math.sin(t))

    roots = find_all_roots(eq, (1e-9, math.pi - 1e-9), subdivisions=256, tol=1e-13)
    if not roots:
        return None
    key = (lambda r: _distance_sq(r.x, a)) if pick_max else (lambda r: -_distance_sq(r.x, a))
    return max(roots, key=key).x


def _check_center(a: float):
    if not REAL_TRACE[0] < a < REAL_TRACE[1]:
        raise ValueError(f"center must lie in ({REAL_TRACE[0]:.6f}, {REAL_TRACE[1]:.6f})")


def inner_disk(a: float) -> DiskFit:
    """Largest disk about the real point a contained in the region."""
    _check_center(a)
    if a <= INNER_BRANCH_POINT:
        radius = (a - 1.0) + 1.0 / E
    else:
        radius = E - (a - 1.0)
    return DiskFit(radius, _stationary_angle(a, pick_max=True))


def outer_disk(a: float) -> DiskFit:
    """Smallest disk about the real point a containing the region."""
    _check_center(a)
    if a <= OUTER_BRANCH_POINT:
        return DiskFit(1.0 + E - a, None)
    theta_a = _stationary_angle(a, pick_max=True)
    candidates = [(0.0, _distance_sq(0.0, a)), (math.pi, _distance_sq(math.pi, a))]
    if theta_a is not None:
        candidates.append((theta_a, _distance_sq(theta_a, a)))
    d_best = max(d for _, d in candidates)
    return DiskFit(math.sqrt(d_best), theta_a)


@dataclass(frozen=True)
class ParabolaThreshold:
    b: float
    theta_0: float


def _parabola_profile(theta: float) -> float:
    ec = math.exp(math.cos(theta))
    s = math.sin(theta + math.sin(theta))
    return ec * ec * s * s / (4.0 * (1.0 + ec * math.cos(theta + math.sin(theta))))


@lru_cache(maxsize=1)
def parabola_threshold() -> ParabolaThreshold:
    """Smallest parabola parameter whose region contains the cardioid image.

    The profile's interior stationary point solves
    cos(3t/2 + sin t)(2 + e^{cos t} cos(t + sin t)) + e^{cos t} cos(t/2) = 0.
    """
    def eq(t: float) -> float:
        ec = math.exp(math.cos(t))
        return (math.cos(1.5 * t + math.sin(t)) * (2.0 + ec * math.cos(t + math.sin(t)))
                + ec * math.cos(t / 2.0))

    seed = maximize_1d(_parabola_profile, (0.0, math.pi), grid=1024, refine_tol=1e-10)
    roots = find_all_roots(eq, (1e-9, math.pi - 1e-9), subdivisions=512, tol=1e-13)
    theta_0 = min(roots, key=lambda r: abs(r.x - seed.location)).x if roots else seed.location
    return ParabolaThreshold(b=_parabola_profile(theta_0), theta_0=theta_0)


_CONTACT_TOL = 1e-9  # closure slack so exact tangency counts as inside


def kst_ellipse_included(k: float, samples: int = 1024) -> bool:
    """Whether the conic-region ellipse of parameter k fits inside the region.

    For k <= 1 the conic region is unbounded and cannot fit.  Boundary contact
    within 1e-9 counts as inside (the threshold case k = e - 1 touches the
    leftmost real boundary point exactly).
    """
    if k < 0.0:
        raise ValueError("k must be nonnegative")
    if k <= 1.0:
        return False
    x0 = k * k / (k * k - 1.0)
    u = k / (k * k - 1.0)
    v = 1.0 / math.sqrt(k * k - 1.0)
    if x0 - u < REAL_TRACE[0] - _CONTACT_TOL or x0 + u > REAL_TRACE[1] + _CONTACT_TOL:
        return False
    t = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    pts = x0 + u * np.cos(t) + 1j * v * np.sin(t)
    return bool(contains_batch(pts, margin=-_CONTACT_TOL).all())
