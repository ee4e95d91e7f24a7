"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The numba path is used when numba imports cleanly and the environment
variable CARDIOIDSTAR_NO_NUMBA is unset/empty; otherwise the numpy
implementations (same arithmetic, vectorised) are selected.  Both paths are
deterministic and agree to machine precision; `benchmarks/bench_kernels.py`
times them side by side.

Kernels:
  psi_invert(phi)            invert theta + sin(theta) = phi on [0, pi]
  clearance(wre, wim)        signed radial clearance of points w to the
                             boundary of the cardioid region (positive inside)
  winding_numbers(...)       polygon winding numbers via per-edge angle sums
"""

from __future__ import annotations

import math
import os

import numpy as np

_BISECT_STEPS = 64


# ---------------------------------------------------------------- numpy path

def _psi_invert_np(phi: np.ndarray) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    lo = np.zeros_like(phi)
    hi = np.full_like(phi, math.pi)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (lo + hi)
        below = mid + np.sin(mid) < phi
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def _clearance_np(wre: np.ndarray, wim: np.ndarray) -> np.ndarray:
    wre = np.asarray(wre, dtype=float)
    wim = np.asarray(wim, dtype=float)
    dre = wre - 1.0
    d = np.hypot(dre, wim)
    phi = np.abs(np.arctan2(wim, dre))
    theta = _psi_invert_np(phi)
    out = np.exp(np.cos(theta)) - d
    # w = 1 sits at the centre of starlikeness: clearance is the full inradius
    return np.where(d == 0.0, math.exp(-1.0), out)


def _winding_np(wre, wim, bre, bim, chunk: int = 512) -> np.ndarray:
    wre = np.asarray(wre, dtype=float).ravel()
    wim = np.asarray(wim, dtype=float).ravel()
    bz = np.asarray(bre, dtype=float) + 1j * np.asarray(bim, dtype=float)
    out = np.empty(len(wre), dtype=np.int64)
    for s in range(0, len(wre), chunk):
        w = wre[s : s + chunk] + 1j * wim[s : s + chunk]
        v = bz[None, :] - w[:, None]
        ang = np.angle(v[:, 1:] / v[:, :-1])
        out[s : s + chunk] = np.rint(ang.sum(axis=1) / (2.0 * math.pi)).astype(np.int64)
    return out


# ---------------------------------------------------------------- numba path

def _build_numba():
    from numba import njit

    @njit(cache=True)
    def psi_invert_nb(phi):
        n = phi.shape[0]
        out = np.empty(n)
        for i in range(n):
            lo = 0.0
            hi = math.pi
            target = phi[i]
            for _ in range(_BISECT_STEPS):
                mid = 0.5 * (lo + hi)
                if mid + math.sin(mid) < target:
                    lo = mid
                else:
                    hi = mid
            out[i] = 0.5 * (lo + hi)
        return out

    @njit(cache=True)
    def clearance_nb(wre, wim):
        n = wre.shape[0]
        out = np.empty(n)
        for i in range(n):
            dre = wre[i] - 1.0
            dim = wim[i]
            d = math.hypot(dre, dim)
            if d == 0.0:
                out[i] = math.exp(-1.0)
                continue
            phi = abs(math.atan2(dim, dre))
            lo = 0.0
            hi = math.pi
            for _ in range(_BISECT_STEPS):
                mid = 0.5 * (lo + hi)
                if mid + math.sin(mid) < phi:
                    lo = mid
                else:
                    hi = mid
            theta = 0.5 * (lo + hi)
            out[i] = math.exp(math.cos(theta)) - d
        return out

    @njit(cache=True)
    def winding_nb(wre, wim, bre, bim):
        n = wre.shape[0]
        m = bre.shape[0]
        out = np.empty(n, dtype=np.int64)
        two_pi = 2.0 * math.pi
        for i in range(n):
            total = 0.0
            pre = bre[0] - wre[i]
            pim = bim[0] - wim[i]
            for j in range(1, m):
                cre = bre[j] - wre[i]
                cim = bim[j] - wim[i]
                cross = pre * cim - pim * cre
                dot = pre * cre + pim * cim
                total += math.atan2(cross, dot)
                pre = cre
                pim = cim
            out[i] = int(round(total / two_pi))
        return out

    return psi_invert_nb, clearance_nb, winding_nb


NUMPY_IMPL = {
    "psi_invert": _psi_invert_np,
    "clearance": _clearance_np,
    "winding_numbers": _winding_np,
}

_disabled = bool(os.environ.get("CARDIOIDSTAR_NO_NUMBA"))
NUMBA_AVAILABLE = False
NUMBA_IMPL = None
if not _disabled:
    try:
        _psi_nb, _clear_nb, _wind_nb = _build_numba()
        NUMBA_IMPL = {
            "psi_invert": _psi_nb,
            "clearance": _clear_nb,
            "winding_numbers": lambda wre, wim, bre, bim: _wind_nb(
                np.ascontiguousarray(wre, dtype=float),
                np.ascontiguousarray(wim, dtype=float),
                np.ascontiguousarray(bre, dtype=float),
                np.ascontiguousarray(bim, dtype=float),
            ),
        }
        NUMBA_AVAILABLE = True
    except ImportError:
        NUMBA_IMPL = None

ACTIVE_BACKEND = "numba" if NUMBA_AVAILABLE else "numpy"
_impl = NUMBA_IMPL if NUMBA_AVAILABLE else NUMPY_IMPL


def psi_invert(phi) -> np.ndarray:
    """Solve theta + sin(theta) = phi elementwise, phi in [0, pi]."""
    arr = np.ascontiguousarray(phi, dtype=float)
    return _impl["psi_invert"](arr.ravel()).reshape(arr.shape)


def clearance(wre, wim) -> np.ndarray:
    """Signed clearance of points to the cardioid boundary (positive inside)."""
    a = np.ascontiguousarray(wre, dtype=float)
    b = np.ascontiguousarray(wim, dtype=float)
    return _impl["clearance"](a.ravel(), b.ravel()).reshape(a.shape)


def winding_numbers(points: np.ndarray, boundary: np.ndarray) -> np.ndarray:
    """Winding number of the closed polygon `boundary` around each point."""
    pts = np.asarray(points, dtype=complex).ravel()
    bd = np.asarray(boundary, dtype=complex)
    return _impl["winding_numbers"](pts.real, pts.imag, bd.real, bd.imag)


def implementations() -> dict:
    """Both backends keyed by name, for parity tests and benchmarks."""
    out = {"numpy": NUMPY_IMPL}
    if NUMBA_AVAILABLE:
        out["numba"] = NUMBA_IMPL
    return out
