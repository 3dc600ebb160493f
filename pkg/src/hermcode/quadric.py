"""Quadratic forms in four variables and the six quadric types of PG(3, q).

Types are decided from the zero set alone: its size, plus a collinearity or
coplanarity test in the two cases where size is not enough.  The same
procedure works in every characteristic, which a symmetric-matrix rank
does not (in characteristic 2 the polar form is alternating).

    type            rank  |Z(f)|
    RepeatedPlane   1     q^2+q+1   (all points on one plane)
    PlanePair       2     2q^2+q+1
    LinePoints      2     q+1       (all points on one line)
    Cone            3     q^2+q+1   (not coplanar)
    Hyperbolic      4     (q+1)^2
    Elliptic        4     q^2+1
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvariantViolation
from .evaluation import FormEvaluator, monomial_values
from .gf import FieldSpec
from .linalg import null_space
from .projgeom import PG3, PlaneForm

__all__ = [
    "COEFF_PAIRS",
    "EXPONENTS",
    "QuadraticForm",
    "QuadricClass",
    "ZeroSet",
    "evaluate",
    "zero_set",
    "classify",
    "classify_zero_masks",
    "product_of_planes",
    "fit_forms",
    "singular_points",
    "singular_masks",
    "table_size",
]

COEFF_PAIRS = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))


def _exponent(i: int, j: int) -> tuple[int, ...]:
    e = [0, 0, 0, 0]
    e[i] += 1
    e[j] += 1
    return tuple(e)


EXPONENTS = tuple(_exponent(i, j) for i, j in COEFF_PAIRS)


class QuadricClass(enum.Enum):
    REPEATED_PLANE = ("RepeatedPlane", 1)
    PLANE_PAIR = ("PlanePair", 2)
    LINE_POINTS = ("LinePoints", 2)
    CONE = ("Cone", 3)
    HYPERBOLIC = ("Hyperbolic", 4)
    ELLIPTIC = ("Elliptic", 4)

    def __init__(self, label: str, rank: int):
        self.label = label
        self.rank = rank

    @property
    def code(self) -> int:
        return _CLASS_ORDER.index(self)

    def __str__(self) -> str:
        return self.label


_CLASS_ORDER = list(QuadricClass)


def table_size(cls: QuadricClass, q: int) -> int:
    return {
        QuadricClass.REPEATED_PLANE: q * q + q + 1,
        QuadricClass.PLANE_PAIR: 2 * q * q + q + 1,
        QuadricClass.LINE_POINTS: q + 1,
        QuadricClass.CONE: q * q + q + 1,
        QuadricClass.HYPERBOLIC: (q + 1) ** 2,
        QuadricClass.ELLIPTIC: q * q + 1,
    }[cls]


@dataclass(frozen=True)
class QuadraticForm:
    """``f = sum(c_ij x_i x_j)`` with coefficients in :data:`COEFF_PAIRS` order."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 10:
            raise ValueError("a quadratic form in 4 variables has 10 coefficients")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: dict) -> QuadraticForm:
        """Build from ``{(i, j): c}``; e.g. ``{(0, 1): 1, (2, 3): 1}`` is x0x1 + x2x3."""
        coeffs = [0] * 10
        for (i, j), c in terms.items():
            i, j = min(i, j), max(i, j)
            k = COEFF_PAIRS.index((i, j))
            coeffs[k] = field.add(coeffs[k], c)
        return cls(field, tuple(coeffs))

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> QuadraticForm:
        return cls(field, tuple(int(c) for c in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def scale(self, lam: int) -> QuadraticForm:
        return QuadraticForm(self.field, tuple(self.field.mul(lam, c) for c in self.coeffs))

    def normalized(self) -> QuadraticForm:
        """The scalar multiple whose first nonzero coefficient is 1."""
        for c in self.coeffs:
            if c:
                return self.scale(self.field.inv(c))
        raise ValueError("zero form")

    def __call__(self, coords) -> int:
        F = self.field
        acc = 0
        for c, (i, j) in zip(self.coeffs, COEFF_PAIRS):
            if c:
                acc = F.add(acc, F.mul(c, F.mul(int(coords[i]), int(coords[j]))))
        return acc


@dataclass(frozen=True)
class ZeroSet:
    points: tuple[int, ...]
    mask: np.ndarray

    def __len__(self) -> int:
        return len(self.points)


# -- per-geometry caches -------------------------------------------------------

@lru_cache(maxsize=None)
def _evaluator(pg: PG3) -> FormEvaluator:
    return FormEvaluator(pg.field, monomial_values(pg.field, pg.points, EXPONENTS))


@lru_cache(maxsize=None)
def _shape_keys(pg: PG3) -> tuple[dict, dict]:
    """Packed point masks of every line and every plane, for exact-set lookup."""
    lines = {np.packbits(row).tobytes(): i for i, row in enumerate(pg.line_mask)}
    planes = {np.packbits(row).tobytes(): i for i, row in enumerate(pg.incidence)}
    return lines, planes


def plane_of_mask(pg: PG3, mask: np.ndarray) -> int | None:
    return _shape_keys(pg)[1].get(np.packbits(mask).tobytes())


def line_of_mask(pg: PG3, mask: np.ndarray) -> int | None:
    return _shape_keys(pg)[0].get(np.packbits(mask).tobytes())


def _check(f: QuadraticForm) -> None:
    if f.is_zero():
        raise ValueError("the zero form has no zero set in this sense")


# -- single forms --------------------------------------------------------------

def evaluate(f: QuadraticForm, point) -> int:
    """Value of f at the normalized representative of a point."""
    coords = point.coords if hasattr(point, "coords") else point
    return f(coords)


def zero_set(f: QuadraticForm, pg: PG3) -> ZeroSet:
    _check(f)
    mask = _evaluator(pg).zero_mask(np.array([f.coeffs]))[0]
    return ZeroSet(tuple(np.flatnonzero(mask).tolist()), mask)


def classify(f: QuadraticForm, pg: PG3) -> QuadricClass:
    _check(f)
    codes = classify_zero_masks(pg, _evaluator(pg).zero_mask(np.array([f.coeffs])))
    return _CLASS_ORDER[int(codes[0])]


def classify_zero_masks(pg: PG3, Z: np.ndarray) -> np.ndarray:
    """Class codes (index into ``list(QuadricClass)``) for a batch of zero masks.

    Raises InvariantViolation on any zero set that fits no type.
    """
    q = pg.q
    sizes = Z.sum(axis=1)
    out = np.full(len(Z), -1, dtype=np.int64)
    out[sizes == 2 * q * q + q + 1] = QuadricClass.PLANE_PAIR.code
    out[sizes == (q + 1) ** 2] = QuadricClass.HYPERBOLIC.code
    out[sizes == q * q + 1] = QuadricClass.ELLIPTIC.code
    line_keys, plane_keys = _shape_keys(pg)
    rows = np.flatnonzero(sizes == q + 1)
    if len(rows):
        packed = np.packbits(Z[rows], axis=1)
        for r, row in zip(rows, packed):
            if row.tobytes() in line_keys:
                out[r] = QuadricClass.LINE_POINTS.code
    rows = np.flatnonzero(sizes == q * q + q + 1)
    if len(rows):
        packed = np.packbits(Z[rows], axis=1)
        plane, cone = QuadricClass.REPEATED_PLANE.code, QuadricClass.CONE.code
        for r, row in zip(rows, packed):
            out[r] = plane if row.tobytes() in plane_keys else cone
    bad = np.flatnonzero(out < 0)
    if len(bad):
        raise InvariantViolation(
            f"zero set of size {int(sizes[bad[0]])} matches no quadric type")
    return out


def product_of_planes(field: FieldSpec, h1, h2) -> QuadraticForm:
    """Expand ``(sum a_i x_i)(sum b_j x_j)`` into a quadratic form."""
    a = h1.coeffs if isinstance(h1, PlaneForm) else tuple(h1)
    b = h2.coeffs if isinstance(h2, PlaneForm) else tuple(h2)
    if not any(a) or not any(b):
        raise ValueError("zero linear form")
    terms: dict = {}
    F = field
    for i in range(4):
        for j in range(4):
            c = F.mul(a[i], b[j])
            if c:
                key = (min(i, j), max(i, j))
                terms[key] = F.add(terms.get(key, 0), c)
    return QuadraticForm.from_terms(field, terms)


def fit_forms(pg: PG3, points) -> list[QuadraticForm]:
    """Row-reduced basis of the quadratic forms vanishing on all given points."""
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    E = monomial_values(pg.field, pg.points[points], EXPONENTS).T
    basis = null_space(pg.field, E)
    return [QuadraticForm(pg.field, tuple(row.tolist())) for row in basis]


def singular_masks(pg: PG3, Z: np.ndarray) -> np.ndarray:
    """Vertex masks for a batch of zero masks.

    A zero P is singular when every line through P carrying a second zero is
    contained in the zero set, i.e. no line through P meets it in 2..q points.
    """
    q = pg.q
    counts = Z[:, pg.line_points].sum(axis=2)  # (B, lines)
    partial = ((counts >= 2) & (counts <= q)).astype(np.float32)
    hit = partial @ pg.line_mask.astype(np.float32)
    return Z & (hit == 0)


def singular_points(f: QuadraticForm, pg: PG3) -> list[int]:
    _check(f)
    Z = zero_set(f, pg).mask
    return np.flatnonzero(singular_masks(pg, Z[None, :])[0]).tolist()
