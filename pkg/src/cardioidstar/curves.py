"""Plot-ready samples of the boundary curves of the region's best dominants
and subordinants (the comparison lines, rays, parabola, conics and disks).

Curve ids:
  gamma0  cardioid boundary itself
  gamma1  vertical line Re w = min Re (the order threshold)
  gamma2  vertical line Re w = 1 + e
  gamma3  argument rays |arg w| = gamma_0 * pi/2
  gamma4  parabola |w - b| - Re w = b, b the parabolic threshold
  gamma5  conic-region ellipse at parameter k = e - 1
  gamma6  largest inscribed circle (centre 1 + (e^2-1)/(2e), radius (e^2+1)/(2e))
  gamma7  smallest circumscribed circle (centre (e^2+1)/(2e), radius 1 + (e^2-1)/(2e))
  gamma8  reference vertical ellipse, semi-axes 2.1074/1.0731 about 1.7052
  gamma9  reference vertical ellipse about (1+e)/2, semi-axes (1+e)/2 and (e + (1+e)(1-1/e))/2

gamma8/gamma9 are emitted from their literal parameters and are not
re-derived from the region.
"""

from __future__ import annotations

import math

import numpy as np

from . import geometry

E = math.e

CURVE_IDS = tuple(f"gamma{i}" for i in range(10))


def _ellipse(center: complex, semi_x: float, semi_y: float, t: np.ndarray) -> np.ndarray:
    return center + semi_x * np.cos(t) + 1j * semi_y * np.sin(t)


def curve_points(name: str, samples: int = 256) -> tuple[np.ndarray, np.ndarray]:
    """(parameter, points) arrays for the named curve."""
    if samples < 16:
        raise ValueError("need at least 16 samples")
    if name not in CURVE_IDS:
        raise ValueError(f"unknown curve {name!r}; choose one of {CURVE_IDS}")
    if name == "gamma0":
        t = np.linspace(-math.pi, math.pi, samples)
        rad = np.exp(np.cos(t))
        ang = t + np.sin(t)
        return t, 1.0 + rad * np.cos(ang) + 1j * rad * np.sin(ang)
    if name == "gamma1":
        t = np.linspace(-4.0, 4.0, samples)
        return t, geometry.function_bounds().min_re + 1j * t
    if name == "gamma2":
        t = np.linspace(-4.0, 4.0, samples)
        return t, (1.0 + E) + 1j * t
    if name == "gamma3":
        s = 1.0 + E
        t = np.linspace(-s, s, samples)
        phi = geometry.function_bounds().max_arg
        return t, np.abs(t) * np.exp(1j * np.sign(t + 1e-300) * phi)
    if name == "gamma4":
        b = geometry.parabola_threshold().b
        t = np.linspace(-4.0, 4.0, samples)
        return t, t * t / (4.0 * b) + 1j * t
    if name == "gamma5":
        k = E - 1.0
        x0 = k * k / (k * k - 1.0)
        u = k / (k * k - 1.0)
        v = 1.0 / math.sqrt(k * k - 1.0)
        t = np.linspace(-math.pi, math.pi, samples)
        return t, _ellipse(x0, u, v, t)
    if name == "gamma6":
        c = 1.0 + (E * E - 1.0) / (2.0 * E)
        r = (E * E + 1.0) / (2.0 * E)
        t = np.linspace(-math.pi, math.pi, samples)
        return t, _ellipse(c, r, r, t)
    if name == "gamma7":
        c = (E * E + 1.0) / (2.0 * E)
        r = 1.0 + (E * E - 1.0) / (2.0 * E)
        t = np.linspace(-math.pi, math.pi, samples)
        return t, _ellipse(c, r, r, t)
    if name == "gamma8":
        t = np.linspace(-math.pi, math.pi, samples)
        return t, _ellipse(1.7052, 2.1074, 1.0731, t)
    # gamma9: centre (1+e)/2, horizontal semi-axis (1+e)/2,
    # vertical semi-axis (e + (1+e)(1-1/e))/2
    b_const = 1.0 + E
    c_const = 1.0 - 1.0 / E
    t = np.linspace(-math.pi, math.pi, samples)
    return t, _ellipse(b_const / 2.0, b_const / 2.0, (E + b_const * c_const) / 2.0, t)
