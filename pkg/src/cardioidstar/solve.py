"""Deterministic 1-d root finding and bounded 1-d/2-d maximization.

Every routine is a plain grid-plus-refinement scheme with fixed tie-breaking,
so results are identical from run to run (and would stay identical under any
internal parallelisation of the grid sweeps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ROOT_TOL = 1e-12
REFINE_TOL = 1e-8
SCAN_SUBDIVISIONS = 512

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise ValueError("bracket requires lo < hi")
        if self.f_lo * self.f_hi > 0.0:
            raise ValueError("bracket endpoints must have opposite signs")

    @classmethod
    def from_function(cls, f, lo: float, hi: float) -> "Bracket":
        return cls(lo, hi, f(lo), f(hi))


@dataclass(frozen=True)
class RootResult:
    x: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class MaxResult:
    location: object  # float for 1-d, (float, float) for 2-d
    value: float
    cell_size: float


def find_root(f, bracket: Bracket, tol: float = ROOT_TOL) -> RootResult:
    """Bisection with secant acceleration inside a sign-change bracket.

    Stops when |f(x)| <= tol or the bracket width falls below tol; the result
    never leaves the initial bracket.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = bracket.f_lo, bracket.f_hi
    if flo == 0.0:
        return RootResult(lo, 0.0, 0)
    if fhi == 0.0:
        return RootResult(hi, 0.0, 0)
    x, fx = (lo, flo) if abs(flo) < abs(fhi) else (hi, fhi)
    iterations = 0
    while hi - lo > tol and abs(fx) > tol and iterations < 200:
        iterations += 1
        mid = 0.5 * (lo + hi)
        x_new = mid
        if fhi != flo:
            secant = (lo * fhi - hi * flo) / (fhi - flo)
            # accept the secant step only if it lands strictly inside
            if lo + 0.01 * (hi - lo) < secant < hi - 0.01 * (hi - lo):
                x_new = secant
        fx_new = f(x_new)
        if fx_new == 0.0:
            return RootResult(x_new, 0.0, iterations)
        if flo * fx_new < 0.0:
            hi, fhi = x_new, fx_new
        else:
            lo, flo = x_new, fx_new
        x, fx = (x_new, fx_new)
    if abs(flo) < abs(fx):
        x, fx = lo, flo
    if abs(fhi) < abs(fx):
        x, fx = hi, fhi
    return RootResult(x, fx, iterations)


def find_all_roots(f, interval, subdivisions: int = SCAN_SUBDIVISIONS,
                   tol: float = ROOT_TOL) -> list[RootResult]:
    """Uniform sign-change scan followed by find_root on each bracket.

    Returns roots sorted ascending; roots landing exactly on grid nodes are
    kept once.  No sign change on the grid means an empty list.
    """
    if subdivisions < 2:
        raise ValueError("subdivisions must be >= 2")
    lo, hi = interval
    xs = np.linspace(lo, hi, subdivisions + 1)
    vals = np.array([f(x) for x in xs], dtype=float)
    results: list[RootResult] = []
    for i in range(subdivisions):
        if vals[i] == 0.0:
            if not results or abs(results[-1].x - xs[i]) > tol:
                results.append(RootResult(float(xs[i]), 0.0, 0))
            continue
        if vals[i] * vals[i + 1] < 0.0:
            br = Bracket(float(xs[i]), float(xs[i + 1]), float(vals[i]), float(vals[i + 1]))
            results.append(find_root(f, br, tol))
    if vals[-1] == 0.0 and (not results or abs(results[-1].x - xs[-1]) > tol):
        results.append(RootResult(float(xs[-1]), 0.0, 0))
    return sorted(results, key=lambda r: r.x)


def _golden_max(f, lo: float, hi: float, tol: float):
    a, b = lo, hi
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
    x = c if fc > fd else d
    return x, f(x), b - a


def maximize_1d(f, interval, grid: int = 256, refine_tol: float = REFINE_TOL) -> MaxResult:
    """Grid scan plus golden-section refinement around the best cell."""
    if grid < 16:
        raise ValueError("grid must be >= 16")
    lo, hi = interval
    xs = np.linspace(lo, hi, grid + 1)
    vals = np.array([f(x) for x in xs], dtype=float)
    i = int(np.argmax(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, grid)]
    x, v, width = _golden_max(f, float(a), float(b), refine_tol)
    if vals[i] >= v:  # golden section never loses to its own grid seed
        x, v = float(xs[i]), float(vals[i])
    return MaxResult(x, v, width)


def maximize_2d(f, rect, grid: int = 64, refine_tol: float = REFINE_TOL) -> MaxResult:
    """Deterministic rectangle maximization: repeated grid scan with cell shrink.

    `f` must accept numpy arrays (it is evaluated on full meshes).  Ties on a
    scan go to the lexicographically smallest grid index, so the answer cannot
    depend on evaluation order.  The reported value dominates every node of
    every scan performed.
    """
    if grid < 64:
        raise ValueError("grid must be >= 64 per axis")
    (plo, phi), (xlo, xhi) = rect
    best_val = -math.inf
    best_loc = (plo, xlo)
    lo0, hi0 = (plo, xlo), (phi, xhi)
    cell = max(phi - plo, xhi - xlo) / grid
    for _ in range(200):
        ps = np.linspace(plo, phi, grid + 1)
        xs = np.linspace(xlo, xhi, grid + 1)
        P, X = np.meshgrid(ps, xs, indexing="ij")
        V = np.asarray(f(P, X), dtype=float)
        flat = int(np.argmax(V))  # first maximum in C order = lexicographic tie-break
        i, j = np.unravel_index(flat, V.shape)
        if V[i, j] > best_val:
            best_val = float(V[i, j])
            best_loc = (float(P[i, j]), float(X[i, j]))
        cell = max((phi - plo) / grid, (xhi - xlo) / grid)
        if cell <= refine_tol:
            break
        dp, dx = 1.5 * (phi - plo) / grid, 1.5 * (xhi - xlo) / grid
        plo = max(lo0[0], best_loc[0] - dp)
        phi = min(hi0[0], best_loc[0] + dp)
        xlo = max(lo0[1], best_loc[1] - dx)
        xhi = min(hi0[1], best_loc[1] + dx)
    return MaxResult(best_loc, best_val, cell)
