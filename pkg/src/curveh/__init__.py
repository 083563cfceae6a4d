"""Jacobian syzygies, type and freeness defect of reduced plane curves."""

from .algebra import GF, QQ, Field, HomogeneousPolynomial, parse_poly, render
from .arrangements import Arrangement, catalog, intersection_profile
from .hierarchy import CurveClass, CurveReport, analyze, classify, curve_type
from .jacobian import JacobianEngine, NonReducedError, UncertifiedError

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "CurveClass",
    "CurveReport",
    "Field",
    "GF",
    "HomogeneousPolynomial",
    "JacobianEngine",
    "NonReducedError",
    "QQ",
    "UncertifiedError",
    "analyze",
    "catalog",
    "classify",
    "curve_type",
    "intersection_profile",
    "parse_poly",
    "render",
]
