"""Numerical toolkit for the cardioid image of the unit disk under
1 + z*exp(z) and the starlike function family it generates."""

from .series import (PowerSeries, cardioid_series, from_coeffs, ps_add,
                     ps_compose, ps_div, ps_exp, ps_from_caratheodory,
                     ps_log_coeffs, ps_log_derivative, ps_mul, ps_reversion)
from .solve import (Bracket, MaxResult, RootResult, find_all_roots, find_root,
                    maximize_1d, maximize_2d)
from .geometry import (DiskFit, FunctionBounds, ParabolaThreshold,
                       boundary_point, boundary_curve, contains,
                       function_bounds, inner_disk, kst_ellipse_included,
                       modulus_bound, outer_disk, parabola_threshold)
from .radii import (RadiusQuery, RadiusResult, growth_covering,
                    inclusion_thresholds, janowski_included,
                    single_coeff_threshold, solve_radius)
from .coefficients import (BellTable, FunctionalResult, audit_functionals,
                           b2b3_minus_b4, bell_numbers,
                           caratheodory_to_coeffs, extremal_coeffs,
                           fekete_szego_bound, h3_components, h3_direct,
                           h3_triangle_bound, h3_upper_bound, hankel,
                           inverse_fs_bound, nfold_h3, schwarz_cubic_bound,
                           sum_inequality_check)
from .subordination import (BoundarySampler, SharpnessReport,
                            radius_sharpness, sharp_radius_oracle,
                            subordinate_to_cardioid)

__version__ = "0.1.0"
