"""Integrals of functions of the visual angle of planar convex sets.

A convex body is described by the Fourier coefficients of its support
function. For a function ``f`` of the angle ``w`` under which the body is
seen from an exterior point, ``int f(w) dP`` over the exterior can be
computed by a series in the harmonic energies ``c_k**2``, by the
``M(f)``/``beta_k(f)`` functional route, by closed forms for classical
families, or by direct quadrature in tangent-line coordinates.
"""
from .body import (
    BodySpecError,
    ConvexBody,
    ConvexityError,
    OriginNotInteriorError,
    circle,
    cw3,
    dump_body,
    ellipse,
    from_fourier,
    from_samples,
    load_body,
    parse_body,
    random_body,
    visual_angle_at,
)
from .bounds import (
    BoundRecord,
    BoundsReport,
    NotApplicableError,
    bounds_report,
    constant_width_lower_bound,
    masotti_lower_bounds,
    sin_power_constant_width,
    upper_bound,
)
from .formulas import (
    M_m,
    M_of,
    beta_k_of,
    crofton,
    functional_route,
    hurwitz_integral,
    level_set_area,
    masotti,
    master_series,
    omega_minus_sin_power,
    sin_power,
)
from .functions import GrowthError, VisualFunction, parse_function
from .quadrature import IntegralResult, QuadratureError, QuadratureSpec, integrate_exterior, level_set_area_direct
from .special_fn import DomainError

__version__ = "0.1.0"
