"""Coefficient functionals for the starlike family of the cardioid map.

Implements Bell-number extremal coefficients, the Fekete-Szego and inverse
functionals, Hankel determinants, the rectangle maximization bounding the
third Hankel determinant, n-fold symmetric cases, the square-sum inequality,
and a seeded stochastic audit over the admissible first four Caratheodory
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import (PowerSeries, cardioid_series, ps_div, ps_exp,
                     ps_from_caratheodory, ps_mul, from_coeffs)
from .solve import maximize_1d, maximize_2d, MaxResult

SQRT_2_5 = math.sqrt(0.4)


# ------------------------------------------------------------- Bell numbers

@dataclass(frozen=True)
class BellTable:
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def bell_numbers(n_max: int) -> BellTable:
    """B_0..B_{n_max} by the binomial recurrence, exact integers."""
    if not 0 <= n_max <= 20:
        raise ValueError("n_max must lie in [0, 20]")
    b = [1]
    for n in range(n_max):
        b.append(sum(math.comb(n, k) * b[k] for k in range(n + 1)))
    return BellTable(tuple(b))


def extremal_coeffs(n: int, order: int) -> PowerSeries:
    """Taylor coefficients of the n-fold extremal map z*exp((e^{z^n}-1)/n)."""
    if n < 1:
        raise ValueError("fold index must be >= 1")
    if order < n + 1:
        raise ValueError("order must be at least n+1")
    return ps_from_caratheodory(cardioid_series(order, fold=n))


# ----------------------------------------------- coefficient formulas (a15)

def caratheodory_to_coeffs(p1, p2, p3, p4):
    """First Taylor coefficients (b2..b5) from the first four Caratheodory
    coefficients.  Accepts scalars or numpy arrays."""
    p1 = np.asarray(p1, dtype=complex)
    p2 = np.asarray(p2, dtype=complex)
    p3 = np.asarray(p3, dtype=complex)
    p4 = np.asarray(p4, dtype=complex)
    b2 = p1 / 2.0
    b3 = (p2 + p1 ** 2 / 2.0) / 4.0
    b4 = (p3 + 0.75 * p1 * p2) / 6.0
    b5 = (p1 ** 4 / 48.0 + p2 ** 2 / 4.0 + 2.0 / 3.0 * p1 * p3
          - p1 ** 2 * p2 / 8.0 + p4) / 8.0
    return b2, b3, b4, b5


def caratheodory_tower(p1, zeta, eta, xi):
    """Admissible (p2, p3, p4) from p1 in [0,2] and zeta, eta, xi in the
    closed unit disk (the standard coefficient-body parametrization)."""
    p1 = np.asarray(p1, dtype=float)
    zeta = np.asarray(zeta, dtype=complex)
    eta = np.asarray(eta, dtype=complex)
    xi = np.asarray(xi, dtype=complex)
    t = 4.0 - p1 ** 2
    mz = 1.0 - np.abs(zeta) ** 2
    p2 = (p1 ** 2 + zeta * t) / 2.0
    p3 = (p1 ** 3 + 2.0 * p1 * zeta * t - p1 * zeta ** 2 * t + 2.0 * t * mz * eta) / 4.0
    p4 = (p1 ** 4 + t * zeta * (p1 ** 2 * (zeta ** 2 - 3.0 * zeta + 3.0) + 4.0 * zeta)
          - 4.0 * t * mz * (p1 * (zeta - 1.0) * eta + np.conj(zeta) * eta ** 2
                            - (1.0 - np.abs(eta) ** 2) * xi)) / 8.0
    return p2, p3, p4


# ------------------------------------------------------- simple functionals

@dataclass(frozen=True)
class FunctionalResult:
    value: float
    bound: float
    attained_at: str


def fekete_szego_bound(mu: float) -> float:
    """Sharp bound on |b3 - mu*b2^2| over the class."""
    return 0.5 * max(1.0, 2.0 * abs(mu - 1.0))


def inverse_fs_bound(mu: float) -> float:
    """Sharp bound on |A3 - mu*A2^2| for the inverse coefficients.

    A2 = -b2 and A3 = 2 b2^2 - b3 give |A3 - mu*A2^2| = |b3 - (2-mu)*b2^2|,
    so the bound is the direct one at parameter 2 - mu, which by the symmetry
    of max(1, 2|t-1|) about t = 1 equals the direct bound at mu itself.
    """
    return fekete_szego_bound(2.0 - mu)


def hankel(f: PowerSeries, q: int, n: int) -> complex:
    """Determinant of the q x q Hankel matrix of Taylor coefficients starting
    at index n (coefficient 1 is the normalization b1 = 1)."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    top = n + 2 * (q - 1)
    if f.order < top:
        raise ValueError(f"series order {f.order} too short for H_{q}({n})")
    m = np.empty((q, q), dtype=complex)
    for i in range(q):
        for j in range(q):
            m[i, j] = f.coeffs[n + i + j]
    if q == 1:
        return complex(m[0, 0])
    if q == 2:
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if q == 3:
        return complex(
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )
    return complex(np.linalg.det(m))


def schwarz_cubic_bound(mu: float, nu: float) -> float:
    """Schwarz-coefficient functional bound for |c3 + mu c1 c2 + nu c1^3|.

    Only the two parameter regions needed here are supported; anything else
    is refused rather than extrapolated.
    """
    am = abs(mu)
    lower = -2.0 / 3.0 * (am + 1.0)
    in_d8 = 0.5 <= am <= 2.0 and lower <= nu <= (4.0 / 27.0) * (am + 1.0) ** 3 - (am + 1.0)
    in_d9 = am >= 2.0 and lower <= nu <= 2.0 * am * (am + 1.0) / (mu * mu + 2.0 * am + 4.0)
    if not (in_d8 or in_d9):
        raise ValueError(f"(mu, nu) = ({mu}, {nu}) outside the supported regions")
    return (2.0 / 3.0) * (am + 1.0) * math.sqrt((am + 1.0) / (3.0 * (1.0 + nu + am)))


def _schwarz_witness_series(order: int = 8) -> PowerSeries:
    # w(z) = z (q - z)/(1 - q z) with q = sqrt(2/5), the touching Schwarz map
    q = SQRT_2_5
    num = np.zeros(order + 1, dtype=complex)
    num[1], num[2] = q, -1.0
    den = np.zeros(order + 1, dtype=complex)
    den[0], den[1] = 1.0, -q
    return ps_div(from_coeffs(num), from_coeffs(den))


def schwarz_to_function(omega: PowerSeries) -> PowerSeries:
    """Normalized f whose logarithmic derivative is the cardioid map of omega."""
    p = ps_mul(omega, ps_exp(omega))
    coeffs = p.coeffs.copy()
    coeffs[0] += 1.0
    return ps_from_caratheodory(PowerSeries(coeffs))


def class_member_from_caratheodory(p: PowerSeries) -> PowerSeries:
    """Class member attached to a positive-real-part function p.

    The Schwarz transform omega = (p-1)/(p+1) carries p to the unit ball,
    and the member is the normalized f with z f'/f = 1 + omega*exp(omega).
    """
    num = p.coeffs.copy()
    num[0] -= 1.0
    den = p.coeffs.copy()
    den[0] += 1.0
    omega = ps_div(PowerSeries(num), PowerSeries(den))
    return schwarz_to_function(omega)


def b2b3_minus_b4() -> FunctionalResult:
    """Sharp bound (2/3)sqrt(2/5) on |b2 b3 - b4|, with the witness value."""
    f = schwarz_to_function(_schwarz_witness_series())
    value = abs(f[2] * f[3] - f[4])
    bound = schwarz_cubic_bound(2.0, -0.5) / 3.0
    return FunctionalResult(value=value, bound=bound, attained_at="schwarz-map")


# ------------------------------------- third Hankel determinant, both paths

def h3_direct(p1, zeta, eta, xi):
    """H3(1) through the coefficient formulas (the reference path)."""
    p2, p3, p4 = caratheodory_tower(p1, zeta, eta, xi)
    b2, b3, b4, b5 = caratheodory_to_coeffs(p1, p2, p3, p4)
    return b3 * (b2 * b4 - b3 ** 2) - b4 * (b4 - b2 * b3) + b5 * (b3 - b2 ** 2)


def h3_components(p1, zeta, eta, xi):
    """H3(1) via the closed expansion in (p1, zeta, eta, xi).

    The four blocks below are re-derived from the coefficient formulas and
    the admissible parametrization (they agree with h3_direct to rounding);
    t = 4 - p1^2 throughout.
    """
    p = np.asarray(p1, dtype=float)
    z = np.asarray(zeta, dtype=complex)
    h = np.asarray(eta, dtype=complex)
    x = np.asarray(xi, dtype=complex)
    if np.any(p < 0.0) or np.any(p > 2.0):
        raise ValueError("p1 must lie in [0, 2]")
    for arr, nm in ((z, "zeta"), (h, "eta"), (x, "xi")):
        if np.any(np.abs(arr) > 1.0 + 1e-12):
            raise ValueError(f"{nm} must lie in the closed unit disk")
    t = 4.0 - p ** 2
    mz = 1.0 - np.abs(z) ** 2
    me = 1.0 - np.abs(h) ** 2
    u1 = (-4.0 * p ** 6
          + t * (t * (-25.0 * p ** 2 * z ** 2 + 19.0 * p ** 2 * z ** 3
                      + 2.0 * p ** 2 * z ** 4 + 36.0 * z ** 3 - 24.0 * p ** 2 * z ** 3)
                 + 5.0 * p ** 4 * z - 16.0 * p ** 4 * z ** 2))
    u2 = t * mz * (32.0 * p ** 3 - 8.0 * p * t * z - 8.0 * p * t * z ** 2)
    u3 = -t ** 2 * mz * (64.0 + 8.0 * np.abs(z) ** 2)
    u4 = 72.0 * t ** 2 * mz * me * z
    return (u1 + u2 * h + u3 * h ** 2 + u4 * x) / 9216.0


# ------------------------------------------ rectangle majorant maximization

def g1_edge(p):
    """Majorant restricted to x = 0."""
    p = np.asarray(p, dtype=float)
    return 1024.0 - 512.0 * p ** 2 + 128.0 * p ** 3 + 64.0 * p ** 4 - 32.0 * p ** 5 + 4.0 * p ** 6


def g2_edge(p):
    """Majorant restricted to x = 1."""
    p = np.asarray(p, dtype=float)
    return 576.0 + 544.0 * p ** 2 - 272.0 * p ** 4 + 29.0 * p ** 6


def g3_edge(x):
    """The p = 0 case polynomial of the scan's case analysis.

    Note this is G(0, x) minus the f4 block 1152 x (1-x^2)^2; it is kept as
    the case polynomial with its maximum 1024 at x = 0.
    """
    x = np.asarray(x, dtype=float)
    return 1024.0 - 896.0 * x ** 2 + 576.0 * x ** 3 - 128.0 * x ** 4


def f_majorant(p, x, y):
    """Triangle-inequality majorant of 9216*|H3(1)|; maximized at y = 1."""
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    t = 4.0 - p ** 2
    f1 = 4.0 * p ** 6 + t * (t * (25.0 * p ** 2 * x ** 2 + 19.0 * p ** 2 * x ** 3
                                  + 2.0 * p ** 2 * x ** 4 + 36.0 * x ** 3)
                             + 5.0 * p ** 4 * x + 16.0 * p ** 4 * x ** 2
                             + 24.0 * p ** 2 * x ** 3)
    f2 = t * (1.0 - x ** 2) * (t * (80.0 * p * x + 64.0 * p * x ** 2) + 32.0 * p ** 3)
    f3 = t ** 2 * (1.0 - x ** 2) * (64.0 + 8.0 * x ** 2)
    f4 = 72.0 * t ** 2 * x * (1.0 - x ** 2) ** 2
    return f1 + f2 * y + f3 * y ** 2 + f4


def g_majorant(p, x):
    return f_majorant(p, x, 1.0)


P0_EDGE = 2.0 * math.sqrt((68.0 - 7.0 * math.sqrt(34.0)) / 87.0)  # maximiser of g2_edge


@dataclass(frozen=True)
class H3BoundReport:
    bound: float
    scan: MaxResult
    g1_max: float
    g1_argmax: float
    g2_max: float
    g2_argmax: float
    g3_max: float
    g3_argmax: float
    interior_location: tuple[float, float]
    interior_value: float


def h3_upper_bound(grid: int = 128, refine_tol: float = 1e-8) -> H3BoundReport:
    """Maximize the rectangle majorant over [0,2]x[0,1]; bound = max / 9216.

    The report carries the scan's edge-case analysis: the x=0 and x=1 edge
    polynomials, the p=0 case polynomial, and the interior maximizer (which
    is where the global maximum sits).
    """
    if grid < 64:
        raise ValueError("grid must be >= 64")
    scan = maximize_2d(g_majorant, ((0.0, 2.0), (0.0, 1.0)), grid=grid, refine_tol=refine_tol)
    m1 = maximize_1d(g1_edge, (0.0, 2.0), grid=512, refine_tol=refine_tol)
    m2 = maximize_1d(g2_edge, (0.0, 2.0), grid=512, refine_tol=refine_tol)
    m3 = maximize_1d(g3_edge, (0.0, 1.0), grid=512, refine_tol=refine_tol)
    return H3BoundReport(
        bound=scan.value / 9216.0,
        scan=scan,
        g1_max=m1.value, g1_argmax=m1.location,
        g2_max=m2.value, g2_argmax=m2.location,
        g3_max=m3.value, g3_argmax=m3.location,
        interior_location=scan.location,
        interior_value=scan.value,
    )


def h3_triangle_bound() -> float:
    """Bound on |H3(1)| assembled term by term from the sharp ingredient
    bounds |b3||H2(2)| + |b4||b2 b3 - b4| + |b5||b3 - b2^2|."""
    return 1.0 * 0.25 + (5.0 / 6.0) * (2.0 / 3.0) * SQRT_2_5 + (5.0 / 8.0) * 0.5


def nfold_h3(fold: int) -> FunctionalResult:
    """Sharp |H3(1)| bound for the 2- and 3-fold symmetric subclasses."""
    if fold == 3:
        witness = extremal_coeffs(3, 8)
        value = abs(hankel(witness, 3, 1))
        return FunctionalResult(value=value, bound=1.0 / 9.0, attained_at="fold-3 extremal")
    if fold == 2:
        witness = extremal_coeffs(2, 8)
        value = abs(hankel(witness, 3, 1))
        return FunctionalResult(value=value, bound=1.0 / 16.0, attained_at="fold-2 extremal")
    raise ValueError("fold must be 2 or 3")


# ------------------------------------------------------ square-sum inequality

SUM_ALPHA = (1.0 + math.e) ** 2


@dataclass(frozen=True)
class SumInequalityReport:
    lhs: float
    rhs: float
    ok: bool


def sum_inequality_check(f: PowerSeries) -> SumInequalityReport:
    """sum_{k>=2} (k^2 - alpha)|b_k|^2 <= alpha - 1 with alpha = (1+e)^2."""
    if f.order < 8:
        raise ValueError("need truncation order >= 8")
    if abs(f.coeffs[0]) > 1e-12 or abs(f.coeffs[1] - 1.0) > 1e-12:
        raise ValueError("series must be normalized")
    k = np.arange(2, f.order + 1)
    lhs = float(np.sum((k ** 2 - SUM_ALPHA) * np.abs(f.coeffs[2:]) ** 2))
    rhs = SUM_ALPHA - 1.0
    return SumInequalityReport(lhs=lhs, rhs=rhs, ok=lhs <= rhs)


def tail_coeff_bound(k: int) -> float:
    """Corollary bound sqrt((alpha-1)/(k^2-alpha)) valid for k >= 4."""
    if k < 4:
        raise ValueError("valid for k >= 4 only")
    return math.sqrt((SUM_ALPHA - 1.0) / (k * k - SUM_ALPHA))


# ------------------------------------------------------------ seeded audit

AUDIT_BOUNDS = {
    "abs_b2": 1.0,
    "abs_b3": 1.0,
    "abs_b4": 5.0 / 6.0,
    "abs_b5": 5.0 / 8.0,
    "abs_h2_2": 0.25,
    "abs_b2b3_minus_b4": (2.0 / 3.0) * SQRT_2_5,
    "abs_fekete_szego_1": 0.5,
    "abs_h3_1": 0.150627,
    "abs_log_d1": 0.5,
    "abs_log_d2": 0.5,
    "abs_log_d3": 0.5,
}


def _unit_disk_samples(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.sqrt(rng.random(n)) * np.exp(2j * math.pi * rng.random(n))


def audit_functionals(seed: int, samples: int = 10000) -> dict:
    """Seeded stochastic audit of the coefficient functionals.

    Draws admissible Caratheodory tuples through the coefficient-body tower
    (p1 uniform on [0,2] by rotation invariance, then zeta/eta/xi uniform on
    the closed disk), evaluates each functional, and reports the observed
    maximum against its sharp bound.
    """
    rng = np.random.default_rng(seed)
    p1 = 2.0 * rng.random(samples)
    zeta = _unit_disk_samples(rng, samples)
    eta = _unit_disk_samples(rng, samples)
    xi = _unit_disk_samples(rng, samples)
    p2, p3, p4 = caratheodory_tower(p1, zeta, eta, xi)
    b2, b3, b4, b5 = caratheodory_to_coeffs(p1, p2, p3, p4)
    h3 = b3 * (b2 * b4 - b3 ** 2) - b4 * (b4 - b2 * b3) + b5 * (b3 - b2 ** 2)
    d1 = b2 / 2.0
    d2 = (b3 - b2 ** 2 / 2.0) / 2.0
    d3 = (b4 - b2 * b3 + b2 ** 3 / 3.0) / 2.0
    observed = {
        "abs_b2": float(np.abs(b2).max()),
        "abs_b3": float(np.abs(b3).max()),
        "abs_b4": float(np.abs(b4).max()),
        "abs_b5": float(np.abs(b5).max()),
        "abs_h2_2": float(np.abs(b2 * b4 - b3 ** 2).max()),
        "abs_b2b3_minus_b4": float(np.abs(b2 * b3 - b4).max()),
        "abs_fekete_szego_1": float(np.abs(b3 - b2 ** 2).max()),
        "abs_h3_1": float(np.abs(h3).max()),
        "abs_log_d1": float(np.abs(d1).max()),
        "abs_log_d2": float(np.abs(d2).max()),
        "abs_log_d3": float(np.abs(d3).max()),
    }
    functionals = {
        name: {
            "observed_max": observed[name],
            "bound": AUDIT_BOUNDS[name],
            "margin": AUDIT_BOUNDS[name] - observed[name],
        }
        for name in AUDIT_BOUNDS
    }
    return {
        "seed": seed,
        "samples": samples,
        "functionals": functionals,
        "all_within_bounds": all(v["margin"] >= -1e-9 for v in functionals.values()),
        "coefficient_growth": coefficient_growth_monitor(seed, max_index=8),
    }


def coefficient_growth_monitor(seed: int, max_index: int = 8, samples: int = 400) -> dict:
    """Monitor (never assert) |b_k| <= B_{k-1}/(k-1)! on random class members.

    Members beyond the fourth coefficient are generated from convex mixes of
    half-plane kernels (1 + w z)/(1 - w z), |w| = 1 (dense in the positive
    real part family at every order), pushed through the class construction.
    Violations are reported as findings.
    """
    rng = np.random.default_rng(seed + 1)
    bells = bell_numbers(max_index)
    targets = [bells[k - 1] / math.factorial(k - 1) for k in range(2, max_index + 1)]
    worst = np.zeros(max_index - 1)
    findings: list[str] = []
    order = max_index
    for _ in range(samples):
        m = 4
        lam = rng.dirichlet(np.ones(m))
        eps = np.exp(2j * math.pi * rng.random(m))
        coeffs = np.zeros(order + 1, dtype=complex)
        coeffs[0] = 1.0
        for k in range(1, order + 1):
            coeffs[k] = 2.0 * np.sum(lam * eps ** k)
        f = class_member_from_caratheodory(from_coeffs(coeffs))
        mags = np.abs(f.coeffs[2 : max_index + 1])
        worst = np.maximum(worst, mags)
    for idx, (got, target) in enumerate(zip(worst, targets), start=2):
        if got > target + 1e-9:
            findings.append(f"|b_{idx}| reached {got:.9f} above {target:.9f}")
    return {
        "indices": list(range(2, max_index + 1)),
        "observed_max": [float(v) for v in worst],
        "conjectured_bound": [float(t) for t in targets],
        "violations": findings,
    }
