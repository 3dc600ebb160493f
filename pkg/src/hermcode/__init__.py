"""Functional codes of quadrics on the Hermitian surface in PG(3, t^2)."""

__version__ = "0.1.0"

from .gf import FieldElement, FieldSpec, make_field, square_field  # noqa: E402
from .projgeom import PG3, PlaneForm, ProjLine, ProjPoint, Regulus  # noqa: E402
from .hermitian import HermitianSurface, LineKind, build_surface  # noqa: E402
from .quadric import QuadraticForm, QuadricClass  # noqa: E402
from .codes import build_generator_matrix, monomial_basis, weight_distribution  # noqa: E402
from .analysis import bounds, quadric_census  # noqa: E402

__all__ = [
    "FieldElement", "FieldSpec", "make_field", "square_field",
    "PG3", "PlaneForm", "ProjLine", "ProjPoint", "Regulus",
    "HermitianSurface", "LineKind", "build_surface",
    "QuadraticForm", "QuadricClass",
    "build_generator_matrix", "monomial_basis", "weight_distribution",
    "bounds", "quadric_census",
]
