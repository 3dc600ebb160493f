"""Points, lines, planes and reguli of PG(3, q).

Points are stored once, in lexicographic order of their normalized
coordinates (leftmost nonzero coordinate equal to 1), and referred to by
their position in that order everywhere else.  Planes use the same list of
normalized 4-tuples as dual coordinates, so plane ``i`` is the plane with
coefficient vector ``points[i]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .gf import FieldSpec

__all__ = [
    "ProjPoint",
    "ProjLine",
    "PlaneForm",
    "Regulus",
    "PG3",
    "normalize",
]


def normalize(field: FieldSpec, coords) -> tuple[int, ...]:
    """Scale a nonzero vector so that its leftmost nonzero entry is 1."""
    coords = tuple(int(c) for c in coords)
    for c in coords:
        if c:
            inv = field.inv(c)
            return tuple(field.mul(inv, x) for x in coords)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, ...]
    index: int

    def __str__(self) -> str:
        return ":".join(str(c) for c in self.coords)


@dataclass(frozen=True)
class PlaneForm:
    """Plane ``sum(coeffs[i] * x_i) = 0``; coeffs normalized like points."""

    coeffs: tuple[int, ...]
    index: int

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class ProjLine:
    span: tuple[int, int]
    points: tuple[int, ...]
    index: int

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjLine) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __contains__(self, point: int) -> bool:
        return point in self.points

    @cached_property
    def mask(self) -> int:
        m = 0
        for i in self.points:
            m |= 1 << i
        return m


@dataclass(frozen=True)
class Regulus:
    """q+1 pairwise skew lines, kept sorted by global line index."""

    lines: tuple[ProjLine, ...]

    @property
    def points(self) -> list[int]:
        return sorted(set().union(*(l.points for l in self.lines)))

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


class PG3:
    """PG(3, q) over a given field, with incidence tables built on demand."""

    def __init__(self, field: FieldSpec):
        self.field = field
        q = self.q = field.q
        pts = [v for v in itertools.product(range(q), repeat=4)
               if next(c for c in v + (1,) if c) == 1 and any(v)]
        self.points = np.array(pts, dtype=np.int64)
        self.n_points = len(pts)
        self._coords = [tuple(p) for p in pts]

        # vector code -> index of the point it represents (-1 for zero)
        powers = np.array([q**3, q**2, q, 1], dtype=np.int64)
        self._powers = powers
        vec_index = np.full(q**4, -1, dtype=np.int64)
        mul = field.mul_table
        for lam in range(1, q):
            scaled = mul[lam][self.points]
            vec_index[scaled @ powers] = np.arange(self.n_points)
        self.vec_index = vec_index

    def __repr__(self) -> str:
        return f"PG(3,{self.q})"

    # -- points ----------------------------------------------------------

    def point(self, index: int) -> ProjPoint:
        return ProjPoint(self._coords[index], index)

    def enumerate_points(self) -> list[ProjPoint]:
        return [ProjPoint(c, i) for i, c in enumerate(self._coords)]

    def index_of(self, coords) -> int:
        """Index of the point represented by any nonzero vector."""
        code = sum(int(c) * int(w) for c, w in zip(coords, self._powers))
        idx = int(self.vec_index[code])
        if idx < 0:
            raise ValueError("the zero vector is not a projective point")
        return idx

    def indices_of(self, vectors: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`index_of` over the last axis (length 4)."""
        return self.vec_index[vectors @ self._powers]

    def format_point(self, index: int) -> str:
        return ":".join(str(c) for c in self._coords[index])

    def format_plane(self, index: int) -> str:
        return "[" + ",".join(str(c) for c in self._coords[index]) + "]"

    # -- planes ------------------------------------------------------------

    @cached_property
    def incidence(self) -> np.ndarray:
        """Boolean (planes, points) array; ``incidence[h, p]`` iff p on h."""
        add, mul = self.field.add_table, self.field.mul_table
        P = self.points
        acc = np.zeros((self.n_points, self.n_points), dtype=np.int64)
        for i in range(4):
            acc = add[acc, mul[P[:, i][:, None], P[:, i][None, :]]]
        return acc == 0

    def plane(self, coeffs_or_index) -> PlaneForm:
        if isinstance(coeffs_or_index, (int, np.integer)):
            i = int(coeffs_or_index)
        else:
            i = self.index_of(coeffs_or_index)
        return PlaneForm(self._coords[i], i)

    def plane_points(self, plane) -> list[int]:
        h = self._plane_index(plane)
        return np.flatnonzero(self.incidence[h]).tolist()

    def _plane_index(self, plane) -> int:
        if isinstance(plane, PlaneForm):
            return plane.index
        if isinstance(plane, (int, np.integer)):
            return int(plane)
        return self.index_of(plane)

    def planes_through_line(self, line: ProjLine) -> list[PlaneForm]:
        a, b = line.span
        hs = np.flatnonzero(self.incidence[:, a] & self.incidence[:, b])
        return [self.plane(int(h)) for h in hs]

    def plane_through(self, line: ProjLine, point: int) -> PlaneForm:
        """The plane spanned by a line and a point off it."""
        if point in line.points:
            raise ValueError("point lies on the line")
        a, b = line.span
        inc = self.incidence
        h = np.flatnonzero(inc[:, a] & inc[:, b] & inc[:, point])
        return self.plane(int(h[0]))

    # -- lines -------------------------------------------------------------

    def _line_vectors(self, i: int, j: int) -> np.ndarray:
        add, mul = self.field.add_table, self.field.mul_table
        Pi, Pj = self.points[i], self.points[j]
        lam = np.arange(self.q)[:, None]
        vecs = add[Pi[None, :], mul[lam, Pj[None, :]]]
        return np.vstack([vecs, Pj[None, :]])

    def line_through(self, p1: int, p2: int) -> ProjLine:
        p1, p2 = int(p1), int(p2)
        if p1 == p2:
            raise ValueError("a line needs two distinct points")
        idx = int(self.line_of_pair[p1, p2])
        return ProjLine((p1, p2), tuple(self.line_points[idx].tolist()), idx)

    @cached_property
    def _line_tables(self):
        n, q = self.n_points, self.q
        of_pair = np.full((n, n), -1, dtype=np.int32)
        rows = []
        for i in range(n):
            for j in np.flatnonzero(of_pair[i, i + 1:] < 0) + i + 1:
                if of_pair[i, j] >= 0:
                    continue
                pts = np.sort(self.indices_of(self._line_vectors(i, int(j))))
                idx = len(rows)
                rows.append(pts)
                of_pair[np.ix_(pts, pts)] = idx
        np.fill_diagonal(of_pair, -1)
        line_points = np.array(rows, dtype=np.int64)
        assert line_points.shape[1] == q + 1
        return line_points, of_pair

    @property
    def line_points(self) -> np.ndarray:
        """(lines, q+1) array of sorted point indices."""
        return self._line_tables[0]

    @property
    def line_of_pair(self) -> np.ndarray:
        """(points, points) array: index of the line joining two points."""
        return self._line_tables[1]

    @property
    def n_lines(self) -> int:
        return len(self.line_points)

    @cached_property
    def line_mask(self) -> np.ndarray:
        """Boolean (lines, points) membership array."""
        m = np.zeros((self.n_lines, self.n_points), dtype=bool)
        np.put_along_axis(m, self.line_points, True, axis=1)
        return m

    @cached_property
    def lines_through_point(self) -> np.ndarray:
        """(points, q^2+q+1) array of line indices through each point."""
        return np.array([np.flatnonzero(col) for col in self.line_mask.T], dtype=np.int64)

    def line(self, index: int) -> ProjLine:
        pts = tuple(self.line_points[index].tolist())
        return ProjLine((pts[0], pts[1]), pts, int(index))

    def lines(self) -> list[ProjLine]:
        return [self.line(i) for i in range(self.n_lines)]

    def skew(self, l1: ProjLine, l2: ProjLine) -> bool:
        return not (l1.mask & l2.mask)

    def meet(self, l1: ProjLine, l2: ProjLine) -> int | None:
        common = l1.mask & l2.mask
        if not common or l1 == l2:
            return None
        return common.bit_length() - 1

    def transversals(self, l1: ProjLine, l2: ProjLine, l3: ProjLine) -> Regulus:
        """The q+1 lines meeting three pairwise skew lines.

        For each point P of ``l1`` the plane spanned by P and ``l2`` cuts
        ``l3`` in one point R; the line PR is the transversal through P.
        """
        if not (self.skew(l1, l2) and self.skew(l1, l3) and self.skew(l2, l3)):
            raise ValueError("transversals need three pairwise skew lines")
        inc = self.incidence
        a, b = l2.span
        through_l2 = inc[:, a] & inc[:, b]
        l3_pts = np.array(l3.points)
        out = []
        for P in l1.points:
            h = np.flatnonzero(through_l2 & inc[:, P])[0]
            R = l3_pts[inc[h, l3_pts]]
            assert len(R) == 1
            out.append(self.line_through(P, int(R[0])))
        out.sort(key=lambda l: l.points)
        return Regulus(tuple(out))

    def complementary_regulus(self, regulus: Regulus) -> Regulus:
        l1, l2, l3 = regulus.lines[:3]
        return self.transversals(l1, l2, l3)
