import math

import numpy as np
import pytest

from cardioidstar import coefficients as coef
from cardioidstar.coefficients import (SQRT_2_5, audit_functionals,
                                       b2b3_minus_b4, bell_numbers,
                                       caratheodory_to_coeffs, extremal_coeffs,
                                       fekete_szego_bound, g1_edge, g2_edge,
                                       g3_edge, g_majorant, h3_components,
                                       h3_direct, h3_triangle_bound,
                                       h3_upper_bound, hankel, inverse_fs_bound,
                                       caratheodory_tower, nfold_h3,
                                       schwarz_cubic_bound, sum_inequality_check,
                                       tail_coeff_bound)
from cardioidstar.series import from_coeffs, ps_reversion

E = math.e


# ---------------------------------------------------------------- Bell table

def test_bell_small_values():
    assert bell_numbers(5).values == (1, 1, 2, 5, 15, 52)


def test_bell_base_case():
    assert bell_numbers(0)[0] == 1


def test_bell_through_twelve():
    b = bell_numbers(12)
    assert b[10] == 115975
    assert b[12] == 4213597


def test_bell_domain():
    with pytest.raises(ValueError):
        bell_numbers(21)
    with pytest.raises(ValueError):
        bell_numbers(-1)


def test_bell_matches_extremal_coefficients():
    b = bell_numbers(12)
    f1 = extremal_coeffs(1, 13)
    for n in range(13):
        assert abs(f1[n + 1] - b[n] / math.factorial(n)) <= 1e-12


# ------------------------------------------------------------ extremal maps

def test_extremal_first_fold():
    f1 = extremal_coeffs(1, 5)
    assert np.allclose(f1.coeffs, [0, 1, 1, 1, 5 / 6, 5 / 8], atol=1e-14)


def test_extremal_third_fold():
    f3 = extremal_coeffs(3, 8)
    assert f3[4] == pytest.approx(1 / 3, abs=1e-14)
    assert f3[7] == pytest.approx(2 / 9, abs=1e-14)


def test_extremal_second_fold_sparsity():
    f2 = extremal_coeffs(2, 7)
    assert f2[2] == 0 and f2[4] == 0 and f2[6] == 0
    assert f2[3] == pytest.approx(0.5, abs=1e-14)
    assert f2[5] == pytest.approx(3 / 8, abs=1e-14)


def test_extremal_domain():
    with pytest.raises(ValueError):
        extremal_coeffs(0, 5)
    with pytest.raises(ValueError):
        extremal_coeffs(4, 3)


# ------------------------------------------------------ coefficient formulas

def test_coeffs_from_extreme_tuple():
    b2, b3, b4, b5 = caratheodory_to_coeffs(2, 2, 2, 2)
    assert (b2, b3, b4, b5) == pytest.approx((1, 1, 5 / 6, 5 / 8), abs=1e-14)


def test_coeffs_from_alternating_tuple():
    b2, b3, b4, b5 = caratheodory_to_coeffs(0, 2, 0, 2)
    assert (b2, b3, b4) == pytest.approx((0, 0.5, 0), abs=1e-15)
    assert b5 == pytest.approx(3 / 8, abs=1e-15)


def test_coeffs_zero_tuple():
    assert caratheodory_to_coeffs(0, 0, 0, 0) == pytest.approx((0, 0, 0, 0), abs=0)


def test_coeffs_match_series_pipeline(rng):
    # the closed formulas must agree with the full series construction
    # (Schwarz transform of p, then the cardioid map, then integration)
    for _ in range(25):
        pk = 0.5 * (rng.normal(size=6) + 1j * rng.normal(size=6))
        pk[0] = 1.0
        f = coef.class_member_from_caratheodory(from_coeffs(pk))
        b2, b3, b4, b5 = caratheodory_to_coeffs(pk[1], pk[2], pk[3], pk[4])
        assert f[2] == pytest.approx(b2, abs=1e-12)
        assert f[3] == pytest.approx(b3, abs=1e-12)
        assert f[4] == pytest.approx(b4, abs=1e-12)
        assert f[5] == pytest.approx(b5, abs=1e-12)


# ------------------------------------------------------------- Fekete-Szego

def test_fekete_szego_corners():
    assert fekete_szego_bound(1.0) == 0.5
    assert fekete_szego_bound(0.0) == 1.0
    assert fekete_szego_bound(1.5) == 0.5


def test_fekete_szego_attained_by_extremal_pair():
    f1 = extremal_coeffs(1, 4)
    f2 = extremal_coeffs(2, 4)
    for mu in np.linspace(-1.0, 3.0, 41):
        v1 = abs(f1[3] - mu * f1[2] ** 2)
        v2 = abs(f2[3] - mu * f2[2] ** 2)
        # the two-fold map attains the flat part, the one-fold map the wings
        assert max(v1, v2) == pytest.approx(fekete_szego_bound(mu), abs=1e-12)


def test_inverse_fs_values():
    # |A3 - mu A2^2| = |b3 - (2-mu) b2^2| reduces to the direct bound
    assert inverse_fs_bound(2.0) == pytest.approx(fekete_szego_bound(0.0), abs=0)
    assert inverse_fs_bound(1.0) == 0.5
    assert inverse_fs_bound(0.0) == 1.0


def test_inverse_shift_identity(rng):
    for _ in range(100):
        b2 = rng.normal() + 1j * rng.normal()
        b3 = rng.normal() + 1j * rng.normal()
        mu = rng.uniform(-3, 5)
        a2, a3 = -b2, 2.0 * b2 ** 2 - b3
        assert abs(a3 - mu * a2 ** 2) == pytest.approx(
            abs(b3 - (2.0 - mu) * b2 ** 2), abs=1e-12)


def test_inverse_fs_attained(rng):
    f1 = extremal_coeffs(1, 4)
    g1 = ps_reversion(extremal_coeffs(1, 6))
    f2c = extremal_coeffs(2, 4)
    for mu in np.linspace(-1.0, 4.0, 26):
        v1 = abs(g1[3] - mu * g1[2] ** 2)
        v2 = abs((2.0 * f2c[2] ** 2 - f2c[3]) - mu * f2c[2] ** 2)
        assert max(v1, v2) == pytest.approx(inverse_fs_bound(mu), abs=1e-12)


def test_inverse_fourth_coefficient():
    g1 = ps_reversion(extremal_coeffs(1, 6))
    assert abs(g1[4]) == pytest.approx(5 / 6, abs=1e-12)


# ------------------------------------------------------------------- Hankel

def test_hankel_h21_extremal_vanishes():
    f1 = extremal_coeffs(1, 6)
    assert abs(hankel(f1, 2, 1)) <= 1e-14  # b3 - b2^2 = 0


def test_hankel_h22_two_fold():
    f2 = extremal_coeffs(2, 6)
    assert abs(hankel(f2, 2, 2)) == pytest.approx(0.25, abs=1e-14)


def test_hankel_identity_map_vanishes():
    z = from_coeffs([0, 1, 0, 0, 0, 0, 0, 0])
    for q, n in ((2, 1), (2, 2), (3, 1)):
        assert abs(hankel(z, q, n)) == 0.0


def test_hankel_insufficient_coefficients():
    with pytest.raises(ValueError):
        hankel(from_coeffs([0, 1, 1]), 3, 1)


# ------------------------------------------------------------ Schwarz bound

def test_schwarz_cubic_bound_value():
    assert schwarz_cubic_bound(2.0, -0.5) == pytest.approx(2.0 * SQRT_2_5, abs=1e-14)


def test_schwarz_cubic_bound_region_edges():
    schwarz_cubic_bound(0.5, -1.0)   # upper edge of the first region at |mu| = 1/2
    schwarz_cubic_bound(3.0, 1.0)    # interior of the second region
    with pytest.raises(ValueError):
        schwarz_cubic_bound(0.0, 0.0)
    with pytest.raises(ValueError):
        schwarz_cubic_bound(2.0, -3.0)


def test_b2b3_minus_b4_sharp():
    res = b2b3_minus_b4()
    assert res.bound == pytest.approx(0.421637, abs=1e-6)
    assert res.value == pytest.approx(res.bound, abs=1e-6)
    f1 = extremal_coeffs(1, 5)
    assert abs(f1[2] * f1[3] - f1[4]) == pytest.approx(1 / 6, abs=1e-14)
    assert abs(f1[2] * f1[3] - f1[4]) < res.bound


# ----------------------------------------------- third Hankel determinant

def test_h3_components_degenerate_top():
    val = h3_components(2.0, 0.3 + 0.1j, -0.2j, 0.9)
    assert val == pytest.approx(-1.0 / 36.0, abs=1e-14)


def test_h3_components_alternating_case():
    val = h3_components(0.0, 1.0, 0.5, 0.5)
    assert val == pytest.approx(1.0 / 16.0, abs=1e-14)
    direct = h3_direct(0.0, 1.0, 0.5, 0.5)
    assert direct == pytest.approx(1.0 / 16.0, abs=1e-14)
    p2, p3, p4 = caratheodory_tower(0.0, 1.0, 0.5, 0.5)
    assert (p2, p3, p4) == pytest.approx((2.0, 0.0, 2.0), abs=1e-14)


def test_h3_expansion_matches_direct_path(rng):
    n = 500
    p1 = 2.0 * rng.random(n)
    zeta = np.sqrt(rng.random(n)) * np.exp(2j * math.pi * rng.random(n))
    eta = np.sqrt(rng.random(n)) * np.exp(2j * math.pi * rng.random(n))
    xi = np.sqrt(rng.random(n)) * np.exp(2j * math.pi * rng.random(n))
    gap = np.abs(h3_components(p1, zeta, eta, xi) - h3_direct(p1, zeta, eta, xi))
    assert gap.max() <= 1e-9


def test_h3_components_domain():
    with pytest.raises(ValueError):
        h3_components(2.5, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        h3_components(1.0, 1.5, 0.0, 0.0)


def test_h3_direct_reproduces_hankel_on_series(rng):
    # the algebraic H3 matches the determinant of the actual member series
    for _ in range(10):
        p1 = float(2.0 * rng.random())
        zeta, eta, xi = (complex(np.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random()))
                         for _ in range(3))
        p2, p3, p4 = caratheodory_tower(p1, zeta, eta, xi)
        f = coef.class_member_from_caratheodory(
            from_coeffs([1.0, p1, complex(p2), complex(p3), complex(p4), 0.0]))
        assert h3_direct(p1, zeta, eta, xi) == pytest.approx(hankel(f, 3, 1), abs=1e-12)


# ------------------------------------------------------- rectangle majorant

def test_majorant_edge_identities():
    ps = np.linspace(0.0, 2.0, 201)
    xs = np.linspace(0.0, 1.0, 201)
    assert np.allclose(g_majorant(ps, np.zeros_like(ps)), g1_edge(ps), atol=1e-9)
    assert np.allclose(g_majorant(ps, np.ones_like(ps)), g2_edge(ps), atol=1e-9)
    # the p = 0 case polynomial omits the f4 block 1152 x (1-x^2)^2
    assert np.allclose(g_majorant(np.zeros_like(xs), xs),
                       g3_edge(xs) + 1152.0 * xs * (1.0 - xs ** 2) ** 2, atol=1e-9)


def test_majorant_dominated_by_y_one(rng):
    p = 2.0 * rng.random(200)
    x = rng.random(200)
    y = rng.random(200)
    assert (coef.f_majorant(p, x, y) <= g_majorant(p, x) + 1e-9).all()


def test_h3_upper_bound_report():
    rep = h3_upper_bound(grid=128)
    assert rep.bound == pytest.approx(0.150627, abs=1e-5)
    assert rep.g1_max == pytest.approx(1024.0, abs=1e-8)
    assert rep.g1_argmax == pytest.approx(0.0, abs=1e-6)
    assert rep.g3_max == pytest.approx(1024.0, abs=1e-8)
    assert rep.g3_argmax == pytest.approx(0.0, abs=1e-6)
    assert rep.g2_argmax == pytest.approx(coef.P0_EDGE, abs=1e-5)
    # the x = 1 edge polynomial maximum, evaluated exactly at its critical point
    assert rep.g2_max == pytest.approx(g2_edge(coef.P0_EDGE), abs=1e-8)
    assert rep.interior_location[0] == pytest.approx(0.531621, abs=1e-4)
    assert rep.interior_location[1] == pytest.approx(0.482768, abs=1e-4)
    assert rep.interior_value <= 1388.18 + 1e-2


def test_triangle_bound_value_and_ordering():
    tri = h3_triangle_bound()
    assert tri == pytest.approx(0.913864, abs=1e-6)
    rep = h3_upper_bound(grid=64)
    assert tri > rep.bound
    # compositional consistency with the ingredient operations
    ingredients = (1.0 * 0.25
                   + (5.0 / 6.0) * b2b3_minus_b4().bound
                   + (5.0 / 8.0) * fekete_szego_bound(1.0))
    assert tri == pytest.approx(ingredients, abs=1e-12)


def test_nfold_bounds():
    r3 = nfold_h3(3)
    assert r3.bound == 1.0 / 9.0
    assert r3.value == pytest.approx(1.0 / 9.0, abs=1e-13)
    r2 = nfold_h3(2)
    assert r2.bound == 1.0 / 16.0
    assert r2.value == pytest.approx(1.0 / 16.0, abs=1e-13)
    with pytest.raises(ValueError):
        nfold_h3(4)


def test_nfold_identity_map_vanishes():
    z = from_coeffs([0, 1] + [0] * 6)
    assert abs(hankel(z, 3, 1)) == 0.0


# ------------------------------------------------------- square-sum inequality

def test_sum_inequality_on_extremal():
    rep = sum_inequality_check(extremal_coeffs(1, 12))
    assert rep.ok
    assert rep.rhs == pytest.approx((1.0 + E) ** 2 - 1.0, abs=1e-12)


def test_sum_inequality_identity_map():
    rep = sum_inequality_check(from_coeffs([0, 1] + [0] * 10))
    assert rep.lhs == 0.0 and rep.ok


def test_sum_inequality_requires_normalization():
    with pytest.raises(ValueError):
        sum_inequality_check(from_coeffs([0, 2] + [0] * 10))
    with pytest.raises(ValueError):
        sum_inequality_check(from_coeffs([0, 1, 0]))


def test_tail_coeff_bound():
    assert tail_coeff_bound(4) == pytest.approx(2.43, abs=5e-3)
    assert 5.0 / 6.0 <= tail_coeff_bound(4)
    with pytest.raises(ValueError):
        tail_coeff_bound(3)


# ------------------------------------------------------------- seeded audit

def test_audit_respects_all_bounds():
    report = audit_functionals(seed=42, samples=10000)
    assert report["all_within_bounds"]
    for rec in report["functionals"].values():
        assert rec["margin"] >= -1e-9


def test_audit_h3_below_scan_bound():
    report = audit_functionals(seed=7, samples=10000)
    assert report["functionals"]["abs_h3_1"]["observed_max"] <= 0.150627 + 1e-6


def test_audit_reproducible():
    a = audit_functionals(seed=3, samples=2000)
    b = audit_functionals(seed=3, samples=2000)
    assert a == b


def test_growth_monitor_reports_findings():
    # the conjectured envelope B_{k-1}/(k-1)! is monitored, never asserted:
    # kernel-mix members exceed it at k = 7 and k = 8 (cross-checked against
    # an independent contour-integration oracle during development), and the
    # monitor must surface that as findings
    report = audit_functionals(seed=42, samples=1000)
    growth = report["coefficient_growth"]
    assert growth["indices"] == [2, 3, 4, 5, 6, 7, 8]
    # through k = 5 the envelope coincides with proven bounds: no findings there
    for k, got, bound in zip(growth["indices"], growth["observed_max"],
                             growth["conjectured_bound"]):
        if k <= 5:
            assert got <= bound + 1e-9
    assert all(isinstance(v, str) for v in growth["violations"])
    assert any("b_7" in v for v in growth["violations"])
