"""Exact enumeration of numerical Bridgeland walls for (-R, 0, D, 0) on P^3."""
from .bounds import (BoundReport, bound_report, gieseker_region_beta0, lower_cutoff, max_wall_beta0,
                     no_wall_cap, rank_zero_threshold)
from .chern import (POS_INF, ChernVector, StabilityPoint, TwistParameter, bridgeland_slope,
                    discriminant, mumford_slope, quadratic_form, tilt_slope, twist, untwist)
from .conditions import (CandidateQuad, TargetClass, alpha0_squared, check_integral_beta0,
                         check_integral_betak, check_integral_untwisted, check_numerical,
                         rank_interval)
from .enumeration import (BudgetExceeded, EnumerationOptions, ScaledQuad, WallCandidate, WallCatalog,
                          distinct_walls, enumerate_walls, search_space)
from .golden import diff_catalogs, load_fixture
from .geometry import View, classify_point, render_svg, wall_s_at
from .plane import PlaneChern, build_dictionary, plane_tilt_slope, pushforward_chern, t_squared

__version__ = "0.1.0"
