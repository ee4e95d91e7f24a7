"""Shared test oracles, deliberately independent of the library internals."""

import math

import numpy as np
import pytest


def naive_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Truncated Cauchy product by explicit double loop."""
    n = len(a)
    out = np.zeros(n, dtype=complex)
    for i in range(n):
        for j in range(n - i):
            out[i + j] += a[i] * b[j]
    return out


def naive_compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """f(g(w)) by accumulating explicit powers of g (nested convolutions)."""
    n = len(f)
    out = np.zeros(n, dtype=complex)
    out[0] = f[0]
    power = np.zeros(n, dtype=complex)
    power[0] = 1.0
    for j in range(1, n):
        power = naive_convolve(power, g)
        out += f[j] * power
    return out


def naive_exp(a: np.ndarray, terms: int = 40) -> np.ndarray:
    """exp(a) as the partial sum of a^k/k! via naive convolutions."""
    n = len(a)
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0
    power = np.zeros(n, dtype=complex)
    power[0] = 1.0
    fact = 1.0
    for k in range(1, min(terms, n + 1)):
        power = naive_convolve(power, a)
        fact *= k
        out += power / fact
    return out


def boundary_polygon(samples: int = 4096) -> np.ndarray:
    th = np.linspace(-math.pi, math.pi, samples + 1)
    rad = np.exp(np.cos(th))
    ang = th + np.sin(th)
    return 1.0 + rad * np.cos(ang) + 1j * rad * np.sin(ang)


def winding_contains(w: complex, polygon: np.ndarray) -> bool:
    v = polygon - w
    ang = np.angle(v[1:] / v[:-1])
    return int(round(float(ang.sum()) / (2.0 * math.pi))) != 0


@pytest.fixture(scope="session")
def cardioid_polygon():
    return boundary_polygon(4096)


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
