"""Self-verification suites backing the CLI `verify` command.

Each check re-derives a constant or invariant and reports a pass flag plus
the margin by which it held.  The suites are deterministic for a fixed seed.
"""

from __future__ import annotations

import math

import numpy as np

from . import coefficients as coef
from . import geometry, kernels
from .radii import (RadiusQuery, inclusion_thresholds, janowski_included,
                    solve_radius)
from .subordination import radius_sharpness

E = math.e


def _check(name: str, passed: bool, margin: float) -> dict:
    return {"name": name, "pass": bool(passed), "margin": float(margin)}


# ------------------------------------------------------------------ geometry

def geometry_suite(seed: int) -> list[dict]:
    checks = []
    th = np.linspace(0.0, math.pi, 10001)
    dpsi = np.diff(geometry.psi(th))
    checks.append(_check("polar-angle-strictly-increasing", bool((dpsi > 0).all()), float(dpsi.min())))

    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1.0, 5.0, 10000) + 1j * rng.uniform(-4.0, 4.0, 10000)
    clear = kernels.clearance(pts.real, pts.imag)
    keep = np.abs(clear) > 1e-9
    wind = kernels.winding_numbers(pts[keep], geometry.boundary_curve(4096))
    disagree = int(np.sum((clear[keep] > 0) != (wind != 0)))
    checks.append(_check("membership-vs-winding-oracle", disagree == 0, -float(disagree)))

    lo, hi = geometry.REAL_TRACE
    centers = np.linspace(lo + 1e-3, hi - 1e-3, 100)
    bd = geometry.boundary_curve(16384)
    worst = 0.0
    mono_ok = True
    for a in centers:
        d = np.abs(bd - a)
        inner = geometry.inner_disk(float(a)).radius
        outer = geometry.outer_disk(float(a)).radius
        worst = max(worst, abs(d.min() - inner), abs(d.max() - outer))
        mono_ok = mono_ok and inner <= outer
    checks.append(_check("disk-radii-vs-dense-oracle", worst <= 1e-6 and mono_ok, 1e-6 - worst))

    fb = geometry.function_bounds()
    checks.append(_check("min-re", abs(fb.min_re - 0.136038) <= 1e-5, 1e-5 - abs(fb.min_re - 0.136038)))
    checks.append(_check("max-im", abs(fb.max_im - 2.10743) <= 1e-5, 1e-5 - abs(fb.max_im - 2.10743)))
    ratio = fb.max_arg / (math.pi / 2.0)
    checks.append(_check("max-arg-ratio", abs(ratio - 0.89782) <= 1e-5, 1e-5 - abs(ratio - 0.89782)))
    checks.append(_check("boundary-point-at-min-re",
                         abs(geometry.boundary_point(fb.theta_re).real - fb.min_re) <= 1e-9,
                         1e-9 - abs(geometry.boundary_point(fb.theta_re).real - fb.min_re)))

    worst_mod = 0.0
    thm = np.linspace(-math.pi, math.pi, 1024, endpoint=False)
    for r in (0.25, 0.5, 0.75, 1.0):
        z = r * np.exp(1j * thm)
        sampled = np.abs(1.0 + z * np.exp(z)).max()
        worst_mod = max(worst_mod, sampled - geometry.modulus_bound(r))
    checks.append(_check("modulus-bound-dominates-samples", worst_mod <= 1e-9, 1e-9 - worst_mod))

    c_in = geometry.INNER_BRANCH_POINT
    r_in = geometry.inner_disk(c_in).radius
    disk_pts = c_in + r_in * np.exp(1j * thm)
    inside = bool(geometry.contains_batch(disk_pts, margin=-1e-9).all())
    c_out = geometry.OUTER_BRANCH_POINT
    r_out = geometry.outer_disk(c_out).radius
    reach = float(np.abs(bd - c_out).max())
    checks.append(_check("largest-inscribed-disk-inside", inside, 0.0 if inside else -1.0))
    checks.append(_check("circumscribed-disk-attained", reach >= r_out - 1e-9, reach - (r_out - 1e-9)))

    checks.append(_check("ellipse-threshold",
                         geometry.kst_ellipse_included(E - 1.0) and not geometry.kst_ellipse_included(1.5),
                         0.0))
    return checks


# --------------------------------------------------------------------- radii

PRINTED = {
    "convex-alpha@0": ("convex-alpha", {"alpha": 0.0}, 0.256707),
    "F-class@1": ("F-class", {"n": 1}, 0.178105),
    "SL-radius": ("SL-radius", {}, 0.600423),
    "SRL-radius": ("SRL-radius", {}, 0.648826),
    "Se-radius": ("Se-radius", {}, 0.458675),
    "SC-radius": ("SC-radius", {}, 0.330536),
    "Ss-radius": ("Ss-radius", {}, 0.376727),
    "Delta-radius": ("Delta-radius", {}, 0.474928),
    "S-star-into": ("S-star-into", {}, 1.0 / (2.0 * E - 1.0)),
    "Mn-beta@1,2": ("Mn-beta", {"n": 1, "beta": 2.0}, 1.0 / (2.0 * E + 1.0)),
    "F1-zero@1": ("F1-zero", {"n": 1}, math.sqrt(4.0 * E * E + 1.0) - 2.0 * E),
    "F1-half@1": ("F1-half", {"n": 1}, 2.0 / (math.sqrt((3.0 * E + 2.0) ** 2 - 8.0 * E) + 3.0 * E)),
    "F2@1": ("F2", {"n": 1}, 2.0 / (math.sqrt((3.0 * E + 2.0) ** 2 - 8.0 * E) + 3.0 * E)),
    "F3@1": ("F3", {"n": 1}, math.sqrt(1.0 + E * E) - E),
    "convexity-of-p": ("convexity-of-p", {}, (3.0 - math.sqrt(5.0)) / 2.0),
}

SHARP_SIX = ("SL-radius", "SRL-radius", "Se-radius", "SC-radius", "Ss-radius", "Delta-radius")


def radii_suite(seed: int) -> list[dict]:
    checks = []
    for label, (name, params, printed) in PRINTED.items():
        res = solve_radius(RadiusQuery(name, params))
        err = abs(res.value - printed)
        checks.append(_check(f"printed-value:{label}", err <= 1e-5, 1e-5 - err))
        if res.closed_form is not None and not res.saturated:
            gap = abs(res.value - res.closed_form)
            checks.append(_check(f"closed-form:{label}", gap <= 1e-10, 1e-10 - gap))

    for name in SHARP_SIX:
        rep = radius_sharpness(RadiusQuery(name, {}), epsilon=1e-3)
        checks.append(_check(f"sharpness:{name}", rep.contact_ok and rep.violation_ok,
                             -abs(rep.contact_clearance or 1.0)))

    betas = np.linspace(1.05, 1.0 + E + 0.5, 25)
    vals = [solve_radius(RadiusQuery("M-beta", {"beta": float(b)})).value for b in betas]
    mono = all(v2 >= v1 - 1e-12 for v1, v2 in zip(vals, vals[1:]))
    checks.append(_check("bound-radius-nondecreasing", mono, 0.0))

    from .radii import ALPHA_FLOOR
    alphas = np.linspace(ALPHA_FLOOR + 0.01, 0.99, 25)
    v_stmt = [solve_radius(RadiusQuery("starlike-alpha-stmt", {"alpha": float(a)})).value for a in alphas]
    v_proof = [solve_radius(RadiusQuery("starlike-alpha-proof", {"alpha": float(a)})).value for a in alphas]
    mono_s = all(v2 <= v1 + 1e-12 for v1, v2 in zip(v_stmt, v_stmt[1:]))
    mono_p = all(v2 <= v1 + 1e-12 for v1, v2 in zip(v_proof, v_proof[1:]))
    dominated = all(s >= p for s, p in zip(v_stmt, v_proof))
    checks.append(_check("order-radius-nonincreasing", mono_s and mono_p, 0.0))
    checks.append(_check("statement-variant-dominates-proof-variant", dominated, 0.0))

    gammas = np.linspace(0.05, 1.0, 25)
    v_g = [solve_radius(RadiusQuery("strong-gamma", {"gamma": float(g)})).value for g in gammas]
    mono_g = all(v2 >= v1 - 1e-12 for v1, v2 in zip(v_g, v_g[1:]))
    checks.append(_check("strong-order-radius-nondecreasing", mono_g, 0.0))

    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(200):
        b = rng.uniform(-0.999, 0.999)
        a = rng.uniform(b + 1e-6, 1.0)
        pred = janowski_included(a, b)
        center = (1.0 - a * b) / (1.0 - b * b)
        radius = (a - b) / (1.0 - b * b)
        lo, hi = geometry.REAL_TRACE
        if lo < center < hi:
            oracle = radius <= geometry.inner_disk(center).radius + 1e-12
        else:
            oracle = False
        bad += pred != oracle
    checks.append(_check("janowski-vs-disc-oracle", bad == 0, -float(bad)))

    thr = inclusion_thresholds()
    for nm, got, want, tol in (
        ("omega0", thr.omega_0, 0.136038, 1e-5),
        ("gamma0", thr.gamma_0, 0.897828, 1e-5),
        ("parabola-b", thr.parabola_b, 1.58405, 1e-5),
        ("ellipse-k", thr.ellipse_k, E - 1.0, 1e-12),
        ("beta-min", thr.beta_min, 1.0 + E, 1e-12),
    ):
        checks.append(_check(f"threshold:{nm}", abs(got - want) <= tol, tol - abs(got - want)))
    return checks


# -------------------------------------------------------------- coefficients

def coefficients_suite(seed: int) -> list[dict]:
    checks = []
    audit = coef.audit_functionals(seed)
    for nm, rec in audit["functionals"].items():
        checks.append(_check(f"audit:{nm}", rec["margin"] >= -1e-9, rec["margin"]))

    f1 = coef.extremal_coeffs(1, 14)
    bells = coef.bell_numbers(13)
    worst = max(abs(f1[k + 1] - bells[k] / math.factorial(k)) for k in range(13))
    checks.append(_check("bell-consistency", worst <= 1e-12, 1e-12 - worst))

    f2 = coef.extremal_coeffs(2, 8)
    h22 = abs(coef.hankel(f2, 2, 2))
    checks.append(_check("h2(2)-witness", abs(h22 - 0.25) <= 1e-12, 1e-12 - abs(h22 - 0.25)))

    wit = coef.b2b3_minus_b4()
    checks.append(_check("b2b3-b4-witness", abs(wit.value - wit.bound) <= 1e-6,
                         1e-6 - abs(wit.value - wit.bound)))

    rng = np.random.default_rng(seed + 17)
    n = 500
    p1 = 2.0 * rng.random(n)
    zeta = coef._unit_disk_samples(rng, n)
    eta = coef._unit_disk_samples(rng, n)
    xi = coef._unit_disk_samples(rng, n)
    gap = float(np.abs(coef.h3_components(p1, zeta, eta, xi)
                       - coef.h3_direct(p1, zeta, eta, xi)).max())
    checks.append(_check("h3-expansion-vs-direct", gap <= 1e-9, 1e-9 - gap))

    ps = np.linspace(0.0, 2.0, 101)
    xs = np.linspace(0.0, 1.0, 101)
    e1 = float(np.abs(coef.g_majorant(ps, 0.0) - coef.g1_edge(ps)).max())
    e2 = float(np.abs(coef.g_majorant(ps, 1.0) - coef.g2_edge(ps)).max())
    e3 = float(np.abs(coef.g_majorant(0.0, xs)
                      - (coef.g3_edge(xs) + 1152.0 * xs * (1.0 - xs ** 2) ** 2)).max())
    checks.append(_check("majorant-edge-restrictions", max(e1, e2, e3) <= 1e-9,
                         1e-9 - max(e1, e2, e3)))

    worst_inv = 0.0
    for _ in range(100):
        b2 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        b3 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        mu = rng.uniform(-2, 6)
        a2, a3 = -b2, 2.0 * b2 ** 2 - b3
        worst_inv = max(worst_inv, abs(abs(a3 - mu * a2 ** 2) - abs(b3 - (2.0 - mu) * b2 ** 2)))
    checks.append(_check("inverse-shift-identity", worst_inv <= 1e-9, 1e-9 - worst_inv))

    rep = coef.h3_upper_bound(grid=128)
    checks.append(_check("hankel-scan-bound", abs(rep.bound - 0.150627) <= 1e-5,
                         1e-5 - abs(rep.bound - 0.150627)))
    tri = coef.h3_triangle_bound()
    checks.append(_check("hankel-triangle-bound", abs(tri - 0.913864) <= 1e-6,
                         1e-6 - abs(tri - 0.913864)))
    checks.append(_check("triangle-weaker-than-scan", tri > rep.bound, tri - rep.bound))
    for fold, want in ((2, 1.0 / 16.0), (3, 1.0 / 9.0)):
        r = coef.nfold_h3(fold)
        ok = abs(r.value - want) <= 1e-12 and abs(r.bound - want) <= 1e-15
        checks.append(_check(f"nfold-{fold}-witness", ok, 1e-12 - abs(r.value - want)))

    si = coef.sum_inequality_check(coef.extremal_coeffs(1, 12))
    checks.append(_check("square-sum-inequality-f1", si.ok, si.rhs - si.lhs))

    growth = audit["coefficient_growth"]
    checks.append(_check("coefficient-growth-monitor(informational)", True,
                         -float(len(growth["violations"]))))
    return checks


SUITES = {
    "geometry": geometry_suite,
    "radii": radii_suite,
    "coefficients": coefficients_suite,
}


def run_suite(suite: str, seed: int) -> dict:
    if suite == "all":
        names = ("geometry", "radii", "coefficients")
    elif suite in SUITES:
        names = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    report = {"suite": suite, "seed": seed, "checks": []}
    for nm in names:
        report["checks"].extend(SUITES[nm](seed))
    if "coefficients" in names:
        # full stochastic-audit record: seed, sample count, observed maximum
        # per functional with its bound and margin, plus the growth monitor
        report["audit"] = coef.audit_functionals(seed)
    report["total"] = len(report["checks"])
    report["failures"] = sum(not c["pass"] for c in report["checks"])
    report["all_pass"] = report["failures"] == 0
    return report
