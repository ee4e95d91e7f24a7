"""Named radius constants and inclusion thresholds for the cardioid class.

Every catalog entry is defined by a residual equation (solved for its
smallest root in (0, 1] with the bracketing solvers), a closed form when one
exists, or both; when both exist they are cross-checked.  Entries carrying a
sharpness witness also expose the extremal boundary function used by the
subordination module to certify boundary contact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import geometry
from .solve import find_all_roots, maximize_1d

E = math.e
SQRT2 = math.sqrt(2.0)

# threshold below which the order-of-starlikeness equation 1 - r e^{-r} = a
# stops describing the sharp minimum (the profile minimum leaves the real axis)
ALPHA_FLOOR = 1.0 + ((math.sqrt(5.0) - 3.0) / 2.0) * math.exp((math.sqrt(5.0) - 3.0) / 2.0)


@dataclass(frozen=True)
class RadiusQuery:
    name: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    residual: float | None
    closed_form: float | None
    sharp: bool | None = None
    saturated: bool = False


def _smallest_root(f, lo: float = 1e-12, hi: float = 1.0, subdivisions: int = 512) -> float | None:
    roots = find_all_roots(f, (lo, hi), subdivisions=subdivisions, tol=1e-14)
    return roots[0].x if roots else None


def _result(f, closed: float | None, lo: float = 1e-12, hi: float = 1.0) -> RadiusResult:
    root = _smallest_root(f, lo, hi)
    if root is None:
        if closed is not None and 0.0 < closed <= 1.0:
            return RadiusResult(closed, f(closed), closed)
        return RadiusResult(1.0, None, closed, saturated=True)
    return RadiusResult(root, f(root), closed)


def _require(params: dict, *names: str) -> list[float]:
    missing = [n for n in names if n not in params]
    if missing:
        raise ValueError(f"missing parameters: {missing}")
    return [float(params[n]) for n in names]


# ------------------------------------------------------------ entry solvers

def _convexity_of_p(params) -> RadiusResult:
    closed = (3.0 - math.sqrt(5.0)) / 2.0
    return _result(lambda r: r ** 3 - 4.0 * r ** 2 + 4.0 * r - 1.0, closed)


def _starlike_alpha_stmt(params) -> RadiusResult:
    (alpha,) = _require(params, "alpha")
    if not ALPHA_FLOOR < alpha < 1.0:
        raise ValueError(f"alpha must lie in ({ALPHA_FLOOR:.6f}, 1)")
    return _result(lambda r: 1.0 - r * math.exp(-r) - alpha, None)


def _starlike_alpha_proof(params) -> RadiusResult:
    (alpha,) = _require(params, "alpha")
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    return _result(lambda r: 1.0 - r * math.exp(r) - alpha, None)


def _m_beta(params) -> RadiusResult:
    (beta,) = _require(params, "beta")
    if beta <= 1.0:
        raise ValueError("beta must exceed 1")
    if beta >= 1.0 + E:
        return RadiusResult(1.0, None, None, saturated=True)
    return _result(lambda r: 1.0 + r * math.exp(r) - beta, None)


def _strong_gamma(params) -> RadiusResult:
    (gamma,) = _require(params, "gamma")
    if not 0.0 < gamma <= 1.0:
        raise ValueError("gamma must lie in (0, 1]")
    s = math.sin(gamma * math.pi / 2.0)
    target = gamma * math.pi / 2.0

    def residual(r: float) -> float:
        u = math.log(r / s)
        arg = min(1.0, max(-1.0, u / r))
        return math.asin(arg) + math.sqrt(r * r + u * u) - target

    # the arcsin argument is admissible only where |log(r/s)| <= r
    lo_root = _smallest_root(lambda r: r * math.exp(r) - s, 1e-9, 1.0, subdivisions=256)
    lo = lo_root + 1e-12 if lo_root is not None else 1e-9
    hi_root = _smallest_root(lambda r: s * math.exp(r) - r, 1e-9, 1.0, subdivisions=256)
    hi = hi_root if (hi_root is not None and hi_root > lo) else 1.0
    root = _smallest_root(residual, lo, hi)
    if root is None:
        return RadiusResult(1.0, None, None, saturated=True)
    return RadiusResult(min(1.0, root), residual(root), None)


def _convex_alpha(params) -> RadiusResult:
    (alpha,) = _require(params, "alpha")
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")

    def residual(r: float) -> float:
        re = r * math.exp(r)
        return (1.0 - r) * (1.0 - re) * (1.0 - re - alpha) - re

    return _result(residual, None)


def _convexity_profile(r: float, theta: np.ndarray) -> np.ndarray:
    z = r * np.exp(1j * theta)
    a = 1.0 + z * np.exp(z)
    return (a + (1.0 + z) - (1.0 + z) / a).real


def _convexity_numeric(params) -> RadiusResult:
    """Largest r with Re(1 + z f1''/f1') >= 0 on |z| = r: theta grid of 720
    with golden refinement of the minimum, bisection on r to 1e-6."""
    grid = np.linspace(0.0, math.pi, 721)

    def min_profile(r: float) -> float:
        coarse = _convexity_profile(r, grid)
        i = int(np.argmin(coarse))
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
        refined = maximize_1d(lambda t: -_convexity_profile(r, np.array([t]))[0],
                              (float(lo), float(hi)), grid=16, refine_tol=1e-10)
        return min(float(coarse[i]), -refined.value)

    lo, hi = 0.3, 0.9
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        if min_profile(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-6:
            break
    return RadiusResult(0.5 * (lo + hi), None, None)


def _f_class(params) -> RadiusResult:
    (n,) = _require(params, "n")
    n = _check_index(n)
    closed = (math.sqrt(1.0 + n * n * E * E) - n * E) ** (1.0 / n)
    return _result(lambda r: 2.0 * n * r ** n / (1.0 - r ** (2 * n)) - 1.0 / E,
                   closed, hi=1.0 - 1e-9)


def _cs_alpha(params) -> RadiusResult:
    n, alpha = _require(params, "n", "alpha")
    n = _check_index(n)
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    amt = 1.0 + n - alpha
    closed = ((1.0 / E) / (math.sqrt(amt * amt - (1.0 / E) * (2.0 * (1.0 - alpha) - 1.0 / E)) + amt)) ** (1.0 / n)
    return _result(lambda r: (2.0 - 2.0 * alpha - 1.0 / E) * r ** (2 * n)
                   - 2.0 * amt * r ** n + 1.0 / E, closed)


def _sn_ab(params) -> RadiusResult:
    n, a_par, b_par = _require(params, "n", "A", "B")
    n = _check_index(n)
    return _sn_ab_impl(n, a_par, b_par)


def _sn_ab_impl(n: int, A: float, B: float) -> RadiusResult:
    if not (-1.0 <= B < A <= 1.0):
        raise ValueError("need -1 <= B < A <= 1")
    if 0.0 <= B:
        u1 = (1.0 / E) / (A - (1.0 - 1.0 / E) * B)
        closed = min(1.0, u1 ** (1.0 / n))

        def residual(r: float) -> float:
            u = r ** n
            return (A - B) * u / (1.0 - B * B * u * u) - (
                (1.0 - A * B * u * u) / (1.0 - B * B * u * u) - 1.0 + 1.0 / E)

        if closed >= 1.0:
            return RadiusResult(1.0, None, 1.0, saturated=True)
        return _result(residual, closed, hi=1.0 - 1e-9)
    if B < 0.0 <= A:
        r1_sq = ((E * E - 1.0) / (2.0 * E)) / (((E * E + 2.0 * E - 1.0) / (2.0 * E)) * B * B - A * B)
        r1 = r1_sq ** (1.0 / (2.0 * n))
        u1 = (1.0 / E) / (A - (1.0 - 1.0 / E) * B)
        R1 = min(1.0, u1 ** (1.0 / n))
        u2 = E / (A - (E + 1.0) * B)
        R2 = min(1.0, u2 ** (1.0 / n))
        if R1 <= r1:
            def residual(r: float) -> float:
                u = r ** n
                return (A - B) * u / (1.0 - B * B * u * u) - (
                    (1.0 - A * B * u * u) / (1.0 - B * B * u * u) - 1.0 + 1.0 / E)
            closed = R1
        else:
            def residual(r: float) -> float:
                u = r ** n
                return (A - B) * u / (1.0 - B * B * u * u) - (
                    E + 1.0 - (1.0 - A * B * u * u) / (1.0 - B * B * u * u))
            closed = R2
        if closed >= 1.0:
            return RadiusResult(1.0, None, 1.0, saturated=True)
        return _result(residual, closed, hi=1.0 - 1e-9)
    raise ValueError("need -1 <= B < 0 <= A <= 1 or 0 <= B < A <= 1")


def _s_star_into(params) -> RadiusResult:
    return _sn_ab_impl(1, 1.0, -1.0)


def _mn_beta(params) -> RadiusResult:
    n, beta = _require(params, "n", "beta")
    n = _check_index(n)
    if beta <= 1.0:
        raise ValueError("beta must exceed 1")
    closed = (2.0 * E * (beta - 1.0) + 1.0) ** (-1.0 / n)

    def residual(r: float) -> float:
        u = r ** n
        return (2.0 * (beta - 1.0) * u - (1.0 + (1.0 - 2.0 * beta) * u * u)
                - (1.0 / E - 1.0) * (1.0 - u * u))

    return _result(residual, closed)


def _sl(params) -> RadiusResult:
    closed = (2.0 * E - 1.0) / (E * E)
    return _result(lambda r: 1.0 - math.sqrt(1.0 - r) - 1.0 / E, closed)


def _srl(params) -> RadiusResult:
    c = SQRT2 - 1.0
    closed = (1.0 + 2.0 * c * E) / (E * E * c * (c + 2.0 * (c + 1.0 / E) ** 2))

    def residual(r: float) -> float:
        return 1.0 - SQRT2 + c * math.sqrt((1.0 + r) / (1.0 - 2.0 * c * r)) - 1.0 / E

    return _result(residual, closed)


def _se(params) -> RadiusResult:
    closed = 1.0 - math.log(E - 1.0)
    return _result(lambda r: (1.0 - 1.0 / E) - math.exp(-r), closed)


def _sc(params) -> RadiusResult:
    closed = 1.0 - math.sqrt(1.0 - 3.0 / (2.0 * E))
    return _result(lambda r: 4.0 * r / 3.0 - 2.0 * r * r / 3.0 - 1.0 / E, closed)


def _ss(params) -> RadiusResult:
    closed = math.asin(1.0 / E)
    return _result(lambda r: math.sin(r) - 1.0 / E, closed)


def _delta(params) -> RadiusResult:
    closed = (2.0 * E - 1.0) / (2.0 * E * (E - 1.0))
    return _result(lambda r: (1.0 - 1.0 / E) - (math.sqrt(1.0 + r * r) - r), closed)


def _f1_zero(params) -> RadiusResult:
    (n,) = _require(params, "n")
    n = _check_index(n)
    closed = (math.sqrt(4.0 * n * n * E * E + 1.0) - 2.0 * n * E) ** (1.0 / n)
    return _result(lambda r: 4.0 * n * r ** n / (1.0 - r ** (2 * n)) - 1.0 / E,
                   closed, hi=1.0 - 1e-9)


def _f1_half_closed(n: int) -> float:
    disc = (3.0 * n * E + 2.0) ** 2 - 8.0 * n * E
    return (2.0 / (math.sqrt(disc) + 3.0 * n * E)) ** (1.0 / n)


def _f1_half(params) -> RadiusResult:
    (n,) = _require(params, "n")
    n = _check_index(n)
    return _result(lambda r: (3.0 * n * r ** n + n * r ** (2 * n)) / (1.0 - r ** (2 * n)) - 1.0 / E,
                   _f1_half_closed(n), hi=1.0 - 1e-9)


def _f2(params) -> RadiusResult:
    return _f1_half(params)


def _f3(params) -> RadiusResult:
    (n,) = _require(params, "n")
    n = _check_index(n)
    q = n - 1.0 + 1.0 / E
    closed = ((math.sqrt((n + 1.0) ** 2 + 4.0 * q / E) - (n + 1.0)) / (2.0 * q)) ** (1.0 / n)

    def residual(r: float) -> float:
        u = r ** n
        return ((n + 1.0) * u + n * u * u) / (1.0 - u * u) - (u * u / (1.0 - u * u) + 1.0 / E)

    return _result(residual, closed, hi=1.0 - 1e-9)


def _check_index(n: float) -> int:
    if n < 1 or n != int(n):
        raise ValueError("series index n must be a positive integer")
    return int(n)


# ----------------------------------------------------- extremal boundary maps

def _ext_sn_ab(n: int, A: float, B: float):
    return lambda z: (1.0 + A * np.asarray(z, dtype=complex) ** n) / (1.0 + B * np.asarray(z, dtype=complex) ** n)


def extremal_map(name: str, params: dict):
    """Boundary function z -> z f0'(z)/f0(z) of the entry's extremal member.

    Returns None for entries whose sharpness is not a boundary-contact
    statement about the cardioid region (the convexity entries, the
    order/bound/argument radii of the class itself).
    """
    c = SQRT2 - 1.0
    if name == "SL-radius":
        return lambda z: np.sqrt(1.0 + np.asarray(z, dtype=complex))
    if name == "SRL-radius":
        return lambda z: SQRT2 - c * np.sqrt((1.0 - np.asarray(z, dtype=complex))
                                             / (1.0 + 2.0 * c * np.asarray(z, dtype=complex)))
    if name == "Se-radius":
        return lambda z: np.exp(np.asarray(z, dtype=complex))
    if name == "SC-radius":
        return lambda z: 1.0 + 4.0 * np.asarray(z, dtype=complex) / 3.0 + 2.0 * np.asarray(z, dtype=complex) ** 2 / 3.0
    if name == "Ss-radius":
        return lambda z: 1.0 + np.sin(np.asarray(z, dtype=complex))
    if name == "Delta-radius":
        return lambda z: np.asarray(z, dtype=complex) + np.sqrt(1.0 + np.asarray(z, dtype=complex) ** 2)
    if name == "F-class":
        n = _check_index(_require(params, "n")[0])
        return lambda z: 1.0 + 2.0 * n * np.asarray(z, dtype=complex) ** n / (1.0 - np.asarray(z, dtype=complex) ** (2 * n))
    if name == "F1-zero":
        n = _check_index(_require(params, "n")[0])
        return lambda z: 1.0 + 4.0 * n * np.asarray(z, dtype=complex) ** n / (1.0 - np.asarray(z, dtype=complex) ** (2 * n))
    if name == "F1-half":
        n = _check_index(_require(params, "n")[0])
        return lambda z: 1.0 + (3.0 * n * np.asarray(z, dtype=complex) ** n + n * np.asarray(z, dtype=complex) ** (2 * n)) / (1.0 - np.asarray(z, dtype=complex) ** (2 * n))
    if name == "F2":
        n = _check_index(_require(params, "n")[0])
        return lambda z: 1.0 + (3.0 * n * np.asarray(z, dtype=complex) ** n - n * np.asarray(z, dtype=complex) ** (2 * n)) / (1.0 - np.asarray(z, dtype=complex) ** (2 * n))
    if name == "F3":
        n = _check_index(_require(params, "n")[0])

        def q3(z):
            z = np.asarray(z, dtype=complex)
            return 1.0 + n * z ** n / (1.0 + z ** n) + z ** n / (1.0 - z ** n)
        return q3
    if name == "Mn-beta":
        n, beta = _require(params, "n", "beta")
        n = _check_index(n)
        return lambda z: (1.0 + (1.0 - 2.0 * beta) * np.asarray(z, dtype=complex) ** n) / (1.0 - np.asarray(z, dtype=complex) ** n)
    if name == "CSn-alpha":
        n, alpha = _require(params, "n", "alpha")
        n = _check_index(n)

        def qcs(z):
            z = np.asarray(z, dtype=complex)
            return (1.0 + 2.0 * (1.0 + n - alpha) * z ** n + (1.0 - 2.0 * alpha) * z ** (2 * n)) / (1.0 - z ** (2 * n))
        return qcs
    if name == "Sn-AB":
        n, A, B = _require(params, "n", "A", "B")
        return _ext_sn_ab(_check_index(n), A, B)
    if name == "S-star-into":
        return _ext_sn_ab(1, 1.0, -1.0)
    return None


CATALOG = {
    "convexity-of-p": _convexity_of_p,
    "starlike-alpha-stmt": _starlike_alpha_stmt,
    "starlike-alpha-proof": _starlike_alpha_proof,
    "M-beta": _m_beta,
    "strong-gamma": _strong_gamma,
    "convex-alpha": _convex_alpha,
    "convexity-numeric": _convexity_numeric,
    "F-class": _f_class,
    "CSn-alpha": _cs_alpha,
    "Sn-AB": _sn_ab,
    "Mn-beta": _mn_beta,
    "SL-radius": _sl,
    "SRL-radius": _srl,
    "Se-radius": _se,
    "SC-radius": _sc,
    "Ss-radius": _ss,
    "Delta-radius": _delta,
    "F1-zero": _f1_zero,
    "F1-half": _f1_half,
    "F2": _f2,
    "F3": _f3,
    "S-star-into": _s_star_into,
}

# self-contained descriptors of each entry's defining equation
REFS = {
    "convexity-of-p": "smallest positive root of r^3 - 4r^2 + 4r - 1 = 0",
    "starlike-alpha-stmt": "smallest root of 1 - r e^{-r} = alpha",
    "starlike-alpha-proof": "smallest root of 1 - r e^{r} = alpha",
    "M-beta": "smallest root of 1 + r e^r = beta; 1 for beta >= 1+e",
    "strong-gamma": "min(1, smallest root of asin(ln(r/s)/r) + sqrt(r^2 + ln^2(r/s)) = g*pi/2), s = sin(g*pi/2)",
    "convex-alpha": "smallest root of (1-r)(1-re^r)(1-re^r-alpha) = re^r",
    "convexity-numeric": "largest r with min_theta Re(1 + z f1''/f1') >= 0 on |z|=r",
    "F-class": "(sqrt(1+n^2 e^2) - n e)^{1/n}",
    "CSn-alpha": "smallest root of (2-2a-1/e) r^{2n} - 2(1+n-a) r^n + 1/e = 0",
    "Sn-AB": "piecewise Janowski-disk radius: R1 if R1 <= r1 else R2",
    "Mn-beta": "(2e(beta-1)+1)^{-1/n}",
    "SL-radius": "root of 1 - sqrt(1-r) = 1/e",
    "SRL-radius": "root of 1 - sqrt(2) + (sqrt(2)-1) sqrt((1+r)/(1-2(sqrt(2)-1)r)) = 1/e",
    "Se-radius": "root of e^{-r} = 1 - 1/e",
    "SC-radius": "root of 4r/3 - 2r^2/3 = 1/e",
    "Ss-radius": "root of sin r = 1/e",
    "Delta-radius": "root of sqrt(1+r^2) - r = 1 - 1/e",
    "F1-zero": "(sqrt(4 n^2 e^2 + 1) - 2 n e)^{1/n}",
    "F1-half": "(2/(sqrt((3ne+2)^2 - 8ne) + 3ne))^{1/n}",
    "F2": "(2/(sqrt((3ne+2)^2 - 8ne) + 3ne))^{1/n}",
    "F3": "((sqrt((n+1)^2 + 4(n-1+1/e)/e) - (n+1))/(2(n-1+1/e)))^{1/n}",
    "S-star-into": "1/(2e - 1)",
}


def solve_radius(query: RadiusQuery) -> RadiusResult:
    if query.name not in CATALOG:
        raise ValueError(f"unknown catalog entry: {query.name!r}")
    return CATALOG[query.name](query.params)


# -------------------------------------------------------------- thresholds

@dataclass(frozen=True)
class InclusionThresholds:
    omega_0: float     # largest order of starlikeness implied by the class
    beta_min: float    # smallest bound constant containing the class
    gamma_0: float     # smallest strong-starlikeness order containing the class
    parabola_b: float  # smallest parabolic-region parameter containing the class
    ellipse_k: float   # smallest conic parameter whose region fits inside


def inclusion_thresholds() -> InclusionThresholds:
    fb = geometry.function_bounds()
    pt = geometry.parabola_threshold()
    return InclusionThresholds(
        omega_0=fb.min_re,
        beta_min=1.0 + E,
        gamma_0=fb.max_arg / (math.pi / 2.0),
        parabola_b=pt.b,
        ellipse_k=E - 1.0,
    )


def janowski_included(A: float, B: float) -> bool:
    """Whether every Janowski-starlike function of parameters (A, B) lies in
    the cardioid class on the whole disk.

    The image of the unit circle under (1+Az)/(1+Bz) is the disk with centre
    a = (1-AB)/(1-B^2) and radius (A-B)/(1-B^2); the test is containment of
    that disk per the sliding-disk radius, split over the two branches.
    B = -1 (half-plane image, unbounded) is accepted and returns False.
    """
    if not (-1.0 <= B < A <= 1.0):
        raise ValueError("need -1 <= B < A <= 1")
    if B == -1.0:
        return False
    a = (1.0 - A * B) / (1.0 - B * B)
    if not geometry.REAL_TRACE[0] < a < geometry.REAL_TRACE[1]:
        return False
    if a <= geometry.INNER_BRANCH_POINT:
        return E * (A - B) <= 1.0 - B
    return A - B <= E * (1.0 + B)


@dataclass(frozen=True)
class GrowthCovering:
    lower: float
    upper: float
    covering: float
    distortion_upper: float
    modulus_sup: float


def growth_covering(r: float) -> GrowthCovering:
    """Sharp growth/covering/distortion data at radius r, from the extremal
    map f1(z) = z exp(e^z - 1)."""
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie in (0, 1)")

    def f1(x: float) -> float:
        return x * math.exp(math.exp(x) - 1.0)

    return GrowthCovering(
        lower=-f1(-r),
        upper=f1(r),
        covering=math.exp(1.0 / E - 1.0),
        distortion_upper=math.exp(math.exp(r) - 1.0) * (1.0 + r * math.exp(r)),
        modulus_sup=math.exp(E - 1.0),
    )


def single_coeff_threshold(kind: str, k: int | None = None) -> float:
    """Sharp single-parameter membership thresholds:

    slit-map:   z/(1-Az)^2 belongs iff |A| <= 1/(2e-1)
    one-term:   z + b_k z^k belongs iff |b_k| <= 1/(e(k-1)+1)
    exp-map:    z exp(Az) belongs iff |A| <= 1/e
    """
    if kind == "slit-map":
        return 1.0 / (2.0 * E - 1.0)
    if kind == "one-term":
        if k is None or k < 2:
            raise ValueError("one-term requires integer k >= 2")
        return 1.0 / (E * (k - 1) + 1.0)
    if kind == "exp-map":
        return 1.0 / E
    raise ValueError(f"unknown kind: {kind!r}")
