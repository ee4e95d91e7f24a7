"""Truncated complex power series arithmetic.

All operations are exact truncations of the formal-series result: a series of
order N carries coefficients c_0..c_N and no operation ever reads or writes
past its order.  Coefficients are complex128; every constant this package
targets has at most six significant printed digits, so doubles are ample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_ORDER = 16

_ATOL = 1e-12


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_N of a truncated Taylor series, index = degree."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=complex).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        return f"PowerSeries(order={self.order}, [{head}{tail}])"


def from_coeffs(values) -> PowerSeries:
    return PowerSeries(np.asarray(values, dtype=complex))


def zero(order: int = DEFAULT_ORDER) -> PowerSeries:
    return PowerSeries(np.zeros(order + 1, dtype=complex))


def identity(order: int = DEFAULT_ORDER) -> PowerSeries:
    c = np.zeros(order + 1, dtype=complex)
    c[1] = 1.0
    return PowerSeries(c)


def cardioid_series(order: int = DEFAULT_ORDER, fold: int = 1) -> PowerSeries:
    """1 + z^fold * exp(z^fold), truncated.  fold=1 is the target map itself."""
    if fold < 1:
        raise ValueError("fold must be >= 1")
    c = np.zeros(order + 1, dtype=complex)
    c[0] = 1.0
    k = 0
    while fold * (k + 1) <= order:
        c[fold * (k + 1)] = 1.0 / math.factorial(k)
        k += 1
    return PowerSeries(c)


def _check_same_order(a: PowerSeries, b: PowerSeries):
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_same_order(a, b)
    return PowerSeries(a.coeffs + b.coeffs)


def ps_scale(a: PowerSeries, s: complex) -> PowerSeries:
    return PowerSeries(a.coeffs * s)


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the shared order."""
    _check_same_order(a, b)
    n = a.order + 1
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        out[k] = np.dot(a.coeffs[: k + 1], b.coeffs[k::-1])
    return PowerSeries(out)


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Series quotient a/b.  Requires b_0 != 0 (no regularisation of poles)."""
    _check_same_order(a, b)
    if abs(b.coeffs[0]) <= _ATOL:
        raise ValueError("division by series with zero constant term")
    n = a.order + 1
    out = np.zeros(n, dtype=complex)
    out[0] = a.coeffs[0] / b.coeffs[0]
    for k in range(1, n):
        out[k] = (a.coeffs[k] - np.dot(b.coeffs[1 : k + 1], out[k - 1 :: -1])) / b.coeffs[0]
    return PowerSeries(out)


def ps_diff(a: PowerSeries) -> PowerSeries:
    """Formal derivative; the result order drops by one (top degree is lost)."""
    k = np.arange(1, a.order + 1)
    return PowerSeries(a.coeffs[1:] * k)


def ps_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) via the differential recurrence (exp a)' = a' * exp a; a_0 must be 0."""
    if abs(a.coeffs[0]) > _ATOL:
        raise ValueError("ps_exp requires zero constant term")
    n = a.order + 1
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0
    for k in range(1, n):
        acc = 0.0 + 0.0j
        for j in range(1, k + 1):
            acc += j * a.coeffs[j] * out[k - j]
        out[k] = acc / k
    return PowerSeries(out)


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g(w)) truncated at the shared order; the inner series must vanish at 0."""
    _check_same_order(f, g)
    if abs(g.coeffs[0]) > _ATOL:
        raise ValueError("composition requires inner series with zero constant term")
    n = f.order + 1
    out = np.zeros(n, dtype=complex)
    out[0] = f.coeffs[n - 1]
    for k in range(n - 2, -1, -1):
        # Horner step: out <- out*g + f_k
        acc = np.zeros(n, dtype=complex)
        for m in range(n):
            acc[m] = np.dot(out[: m + 1], g.coeffs[m::-1])
        acc[0] += f.coeffs[k]
        out = acc
    return PowerSeries(out)


def _check_normalized(f: PowerSeries, who: str):
    if abs(f.coeffs[0]) > _ATOL or abs(f.coeffs[1] - 1.0) > _ATOL:
        raise ValueError(f"{who} requires a normalized series (f_0 = 0, f_1 = 1)")


def ps_log_derivative(f: PowerSeries) -> PowerSeries:
    """z f'(z)/f(z) for normalized f.

    Writing f = z*g with g_0 = 1, the result is 1 + z g'/g, which is exact
    through degree N-1 only, so the returned order is one less than f's.
    """
    _check_normalized(f, "ps_log_derivative")
    g = PowerSeries(f.coeffs[1:])  # f/z, order N-1
    gp = np.zeros(g.order + 1, dtype=complex)
    k = np.arange(1, g.order + 1)
    gp[: g.order] = g.coeffs[1:] * k  # g', zero-padded at top (unused degree)
    ratio = ps_div(PowerSeries(gp), g)  # g'/g
    out = np.zeros(g.order + 1, dtype=complex)
    out[0] = 1.0
    out[1:] = ratio.coeffs[:-1]  # z * (g'/g)
    return PowerSeries(out)


def ps_from_caratheodory(p: PowerSeries) -> PowerSeries:
    """Normalized f with z f'/f = p, for p with p_0 = 1.

    Computed as z * exp(Q) where Q is the term-wise integral of (p-1)/z,
    i.e. Q_k = p_k / k.
    """
    if abs(p.coeffs[0] - 1.0) > _ATOL:
        raise ValueError("ps_from_caratheodory requires constant term 1")
    n = p.order + 1
    q = np.zeros(n, dtype=complex)
    for k in range(1, n):
        q[k] = p.coeffs[k] / k
    e = ps_exp(PowerSeries(q))
    f = np.zeros(n, dtype=complex)
    f[1:] = e.coeffs[:-1]
    return PowerSeries(f)


def ps_reversion(f: PowerSeries) -> PowerSeries:
    """Compositional inverse g with f(g(w)) = w through the truncation order."""
    _check_normalized(f, "ps_reversion")
    n = f.order + 1
    g = np.zeros(n, dtype=complex)
    g[1] = 1.0
    for k in range(2, n):
        comp = ps_compose(f, PowerSeries(g))
        g[k] = -comp.coeffs[k]
    return PowerSeries(g)


def ps_log_coeffs(f: PowerSeries) -> PowerSeries:
    """Coefficients d_k with log(f/z) = 2 * sum_k d_k z^k, for normalized f.

    f of order N determines f/z through degree N-1 only, so d_1..d_{N-1} are
    returned (index k holds d_k, index 0 is zero).
    """
    _check_normalized(f, "ps_log_coeffs")
    g = PowerSeries(f.coeffs[1:])  # f/z
    gp = np.zeros(g.order + 1, dtype=complex)
    k = np.arange(1, g.order + 1)
    gp[: g.order] = g.coeffs[1:] * k
    ratio = ps_div(PowerSeries(gp), g)  # (log g)'
    d = np.zeros(g.order + 1, dtype=complex)
    for m in range(1, g.order + 1):
        d[m] = ratio.coeffs[m - 1] / m / 2.0
    return PowerSeries(d)
