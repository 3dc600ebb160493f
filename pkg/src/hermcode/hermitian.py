"""The non-degenerate Hermitian surface x0^(t+1) + x1^(t+1) + x2^(t+1) + x3^(t+1) = 0."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvariantViolation
from .gf import prime_power, square_field
from .projgeom import PG3, PlaneForm, ProjLine

__all__ = [
    "HermitianSurface",
    "LineKind",
    "PlaneKind",
    "InvariantViolation",
    "build_surface",
    "SUPPORTED_T",
]

SUPPORTED_T = (2, 3, 4)


class LineKind(enum.Enum):
    GENERATOR = "Generator"
    TANGENT = "Tangent"
    SECANT = "Secant"


class PlaneKind(enum.Enum):
    TANGENT = "TangentSection"
    NON_TANGENT = "NonTangentSection"


@dataclass(frozen=True)
class PlaneSection:
    kind: PlaneKind
    points: tuple[int, ...]


class HermitianSurface:
    """Point set, membership mask and tangent planes of X in PG(3, t^2).

    Use :func:`build_surface` rather than calling this directly; it caches
    one instance per ``t``.
    """

    def __init__(self, t: int):
        if prime_power(t) is None:
            raise ValueError(f"t={t} is not a prime power")
        if t not in SUPPORTED_T:
            raise ValueError(f"t={t} is not supported (choose from {SUPPORTED_T})")
        self.t = t
        self.field = F = square_field(t)
        self.q = F.q
        self.pg = pg = PG3(F)

        nrm = F.norm_table[pg.points]
        add = F.add_table
        total = add[add[nrm[:, 0], nrm[:, 1]], add[nrm[:, 2], nrm[:, 3]]]
        self.mask = total == 0
        self.points = np.flatnonzero(self.mask)
        self.n = len(self.points)
        expected = (t * t + 1) * (t**3 + 1)
        if self.n != expected:
            raise InvariantViolation(f"|X| = {self.n}, expected {expected}")
        self.position = np.full(pg.n_points, -1, dtype=np.int64)
        self.position[self.points] = np.arange(self.n)

        # Tangent plane at P: sum(x_i^t * y_i) = 0.  Checked below by its section size.
        conj = F.conj_table[pg.points[self.points]]
        self.tangent_plane_index = pg.indices_of(conj)
        sizes = pg.incidence[self.tangent_plane_index][:, self.points].sum(axis=1)
        if not np.all(sizes == t**3 + t * t + 1):
            raise InvariantViolation("conjugate-gradient plane is not tangent somewhere on X")
        if not np.all(pg.incidence[self.tangent_plane_index, self.points]):
            raise InvariantViolation("a point does not lie on its tangent plane")
        self.tangency_point = {int(h): int(p) for h, p in zip(self.tangent_plane_index, self.points)}
        if len(self.tangency_point) != self.n:
            raise InvariantViolation("two points of X share a tangent plane")

    def __repr__(self) -> str:
        return f"HermitianSurface(t={self.t}, n={self.n})"

    @cached_property
    def bitmask(self) -> int:
        m = 0
        for i in self.points.tolist():
            m |= 1 << i
        return m

    def contains(self, point: int) -> bool:
        return bool(self.mask[point])

    # -- planes ------------------------------------------------------------

    def tangent_plane(self, point: int) -> PlaneForm:
        if not self.mask[point]:
            raise ValueError(f"point {self.pg.format_point(point)} is not on X")
        return self.pg.plane(int(self.tangent_plane_index[self.position[point]]))

    def is_tangent_plane(self, plane) -> bool:
        return self.pg._plane_index(plane) in self.tangency_point

    @cached_property
    def plane_section_sizes(self) -> np.ndarray:
        return self.pg.incidence[:, self.points].sum(axis=1)

    def classify_plane(self, plane) -> PlaneSection:
        h = self.pg._plane_index(plane)
        pts = tuple(int(p) for p in self.points[self.pg.incidence[h, self.points]])
        t = self.t
        if len(pts) == t**3 + t * t + 1:
            kind = PlaneKind.TANGENT
        elif len(pts) == t**3 + 1:
            kind = PlaneKind.NON_TANGENT
        else:
            raise InvariantViolation(f"plane section of size {len(pts)}")
        return PlaneSection(kind, pts)

    def decompose_tangent_section(self, plane) -> tuple[int, list[ProjLine]]:
        """Split a tangent section into its centre and the t+1 lines through it."""
        section = self.classify_plane(plane)
        if section.kind is not PlaneKind.TANGENT:
            raise ValueError("plane is not tangent to X")
        center = self.tangency_point[self.pg._plane_index(plane)]
        remaining = set(section.points) - {center}
        lines = []
        while remaining:
            line = self.pg.line_through(center, min(remaining))
            if self.classify_line(line) is not LineKind.GENERATOR:
                raise InvariantViolation("tangent section is not a pencil of generators")
            lines.append(line)
            remaining -= set(line.points)
        if len(lines) != self.t + 1:
            raise InvariantViolation(f"tangent section has {len(lines)} lines")
        return center, lines

    # -- lines -------------------------------------------------------------

    @cached_property
    def line_section_sizes(self) -> np.ndarray:
        return self.mask[self.pg.line_points].sum(axis=1)

    def _kind_of_size(self, size: int) -> LineKind:
        t = self.t
        if size == t * t + 1:
            return LineKind.GENERATOR
        if size == 1:
            return LineKind.TANGENT
        if size == t + 1:
            return LineKind.SECANT
        raise InvariantViolation(f"line meets X in {size} points")

    def classify_line(self, line: ProjLine | int) -> LineKind:
        if isinstance(line, ProjLine):
            size = int(self.mask[list(line.points)].sum())
        else:
            size = int(self.line_section_sizes[line])
        return self._kind_of_size(size)

    @cached_property
    def generator_indices(self) -> np.ndarray:
        return np.flatnonzero(self.line_section_sizes == self.t * self.t + 1)

    def all_generators(self) -> list[ProjLine]:
        return [self.pg.line(int(i)) for i in self.generator_indices]

    def line_census(self, point: int) -> dict[LineKind, int]:
        """Count generator, tangent and secant lines through a point of X."""
        if not self.mask[point]:
            raise ValueError("point is not on X")
        counts = {k: 0 for k in LineKind}
        for li in self.pg.lines_through_point[point]:
            counts[self._kind_of_size(int(self.line_section_sizes[li]))] += 1
        return counts

    def format_line_census(self, points=None) -> str:
        """Text dump, one line per point of X: ``coords generators tangents secants``."""
        rows = [f"# t={self.t} q={self.q} n={self.n}", "# point generators tangents secants"]
        for p in (self.points if points is None else points):
            c = self.line_census(int(p))
            rows.append(f"{self.pg.format_point(int(p))} {c[LineKind.GENERATOR]} "
                        f"{c[LineKind.TANGENT]} {c[LineKind.SECANT]}")
        return "\n".join(rows) + "\n"


_SURFACES: dict[int, HermitianSurface] = {}


def build_surface(t: int) -> HermitianSurface:
    if t not in _SURFACES:
        _SURFACES[t] = HermitianSurface(t)
    return _SURFACES[t]
