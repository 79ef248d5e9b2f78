"""Exact rational curves on cubic norm-form equations N(X1, X2, X3) = f(t)."""
from .constructions import (
    ConstructionReport,
    RationalCurve,
    approx_coeffs,
    construct,
    curve_deg4,
    curve_deg6_monic,
    curve_general_cubic,
    curve_genform,
    curve_pure_cubic_deg6,
    curve_trinomial,
    except_condition,
    reducible_factorization,
)
from .cubicfield import CubicField, FieldElem, field_check, field_inv, field_mul, norm
from .errors import NormCurveError
from .exactmath import MPoly, RatFunc, UPoly
from .normform import GenForm, KnownPoint, ProblemInstance, normalize
from .polyparse import format_poly, parse_poly
from .verify import Certificate, PointRecord, fiber_check, sample_points, verify_curve_identity

__version__ = "0.1.0"
