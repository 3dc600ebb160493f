import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hermcode.gf import make_field
from hermcode.projgeom import PG3, normalize

PG4 = PG3(make_field(2, 2))
PG9 = PG3(make_field(3, 2))


def _span_oracle(pg, i, j):
    """Normalized points lambda*P + mu*Q by scalar field arithmetic."""
    F = pg.field
    P, Q = pg.points[i], pg.points[j]
    out = set()
    for lam, mu in itertools.product(range(pg.q), repeat=2):
        if lam or mu:
            v = [F.add(F.mul(lam, int(a)), F.mul(mu, int(b))) for a, b in zip(P, Q)]
            out.add(normalize(F, v))
    return out


def _dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(int(x), int(y)))
    return acc


@pytest.mark.parametrize("pg,n", [(PG4, 85), (PG9, 820)], ids=["q4", "q9"])
def test_point_count_and_order(pg, n):
    q = pg.q
    assert pg.n_points == n == (q**4 - 1) // (q - 1)
    assert tuple(pg.points[0]) == (0, 0, 0, 1)
    as_tuples = [tuple(p) for p in pg.points]
    assert as_tuples == sorted(as_tuples)
    for p in as_tuples:
        assert normalize(pg.field, p) == p


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_index_of_every_scalar_multiple(pg):
    F = pg.field
    for i in range(0, pg.n_points, 7):
        for lam in range(1, pg.q):
            v = [F.mul(lam, int(c)) for c in pg.points[i]]
            assert pg.index_of(v) == i
    with pytest.raises(ValueError):
        pg.index_of((0, 0, 0, 0))
    with pytest.raises(ValueError):
        normalize(F, (0, 0, 0, 0))


def test_point_and_plane_formatting():
    assert str(PG4.point(0)) == PG4.format_point(0) == "0:0:0:1"
    assert PG4.format_plane(0) == "[0,0,0,1]"
    assert str(PG4.plane(0)) == "[0,0,0,1]"


def test_incidence_matches_scalar_dot_product_q4():
    F = PG4.field
    for h in range(PG4.n_points):
        for p in range(PG4.n_points):
            assert PG4.incidence[h, p] == (_dot(F, PG4.points[h], PG4.points[p]) == 0)


def test_incidence_matches_scalar_dot_product_q9_sample():
    rng = np.random.default_rng(0)
    F = PG9.field
    for h, p in rng.integers(0, PG9.n_points, size=(3000, 2)):
        assert PG9.incidence[h, p] == (_dot(F, PG9.points[h], PG9.points[p]) == 0)


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_plane_and_line_sizes(pg):
    q = pg.q
    assert np.all(pg.incidence.sum(axis=1) == q * q + q + 1)
    assert pg.n_lines == (q * q + 1) * (q * q + q + 1)
    assert pg.line_points.shape == (pg.n_lines, q + 1)
    assert np.all(pg.line_mask.sum(axis=0) == q * q + q + 1)
    assert pg.lines_through_point.shape == (pg.n_points, q * q + q + 1)


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_two_points_lie_on_exactly_one_line(pg):
    M = pg.line_mask.astype(np.int32)
    common = M.T @ M
    off = ~np.eye(pg.n_points, dtype=bool)
    assert np.all(common[off] == 1)
    L = pg.line_of_pair
    assert np.all(np.diag(L) == -1)
    assert np.array_equal(L, L.T)


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_line_through_matches_span_oracle(pg):
    rng = np.random.default_rng(1)
    for _ in range(200):
        i, j = rng.choice(pg.n_points, size=2, replace=False)
        line = pg.line_through(i, j)
        assert {tuple(pg.points[p]) for p in line.points} == _span_oracle(pg, i, j)
        assert i in line and j in line
        assert line == pg.line_through(j, i)
        assert line == pg.line(line.index)
    with pytest.raises(ValueError):
        pg.line_through(3, 3)


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_planes_through_a_line(pg):
    q = pg.q
    rng = np.random.default_rng(2)
    for li in rng.integers(0, pg.n_lines, size=30):
        line = pg.line(int(li))
        planes = pg.planes_through_line(line)
        assert len(planes) == q + 1
        union = np.zeros(pg.n_points, dtype=bool)
        for h in planes:
            union |= pg.incidence[h.index]
        assert union.all()
        h1, h2 = planes[0].index, planes[1].index
        assert set(np.flatnonzero(pg.incidence[h1] & pg.incidence[h2])) == set(line.points)
        off = next(p for p in range(pg.n_points) if p not in line)
        h = pg.plane_through(line, off)
        assert pg.incidence[h.index, off]
        assert all(pg.incidence[h.index, p] for p in line.points)
        with pytest.raises(ValueError):
            pg.plane_through(line, line.points[0])


def test_plane_lookup_by_coefficients():
    h = PG4.plane((0, 0, 0, 2))
    assert h.coeffs == (0, 0, 0, 1) and h.index == 0
    # x3 = 0 holds exactly on points with last coordinate 0
    pts = PG4.plane_points(h)
    assert all(PG4.points[p][3] == 0 for p in pts) and len(pts) == 21


def test_skew_and_meet():
    pg = PG4
    l1 = pg.line_through(pg.index_of((1, 0, 0, 0)), pg.index_of((0, 1, 0, 0)))
    l2 = pg.line_through(pg.index_of((0, 0, 1, 0)), pg.index_of((0, 0, 0, 1)))
    l3 = pg.line_through(pg.index_of((1, 0, 0, 0)), pg.index_of((0, 0, 1, 0)))
    assert pg.skew(l1, l2)
    assert pg.meet(l1, l2) is None
    assert pg.meet(l1, l3) == pg.index_of((1, 0, 0, 0))
    assert pg.meet(l1, l1) is None


def _random_skew_triple(pg, rng):
    while True:
        idx = rng.choice(pg.n_lines, size=3, replace=False)
        ls = [pg.line(int(i)) for i in idx]
        if all(pg.skew(a, b) for a, b in itertools.combinations(ls, 2)):
            return ls


def _transversals_oracle(pg, ls):
    M = pg.line_mask.astype(np.int32)
    hits = np.ones(pg.n_lines, dtype=bool)
    for l in ls:
        hits &= (M @ M[l.index]) == 1
    return set(np.flatnonzero(hits).tolist())


@pytest.mark.parametrize("pg", [PG4, PG9], ids=["q4", "q9"])
def test_transversals_and_complementary_regulus(pg):
    q = pg.q
    rng = np.random.default_rng(3)
    for _ in range(12):
        ls = _random_skew_triple(pg, rng)
        R = pg.transversals(*ls)
        assert len(R) == q + 1
        assert {l.index for l in R} == _transversals_oracle(pg, ls)
        assert all(pg.skew(a, b) for a, b in itertools.combinations(R.lines, 2))
        S = pg.complementary_regulus(R)
        assert len(S) == q + 1
        assert {l.index for l in ls} <= {l.index for l in S}
        assert set(R.points) == set(S.points)
        assert len(set(R.points)) == (q + 1) ** 2
        for a in R:
            for b in S:
                assert pg.meet(a, b) is not None
        assert {l.index for l in pg.complementary_regulus(S)} == {l.index for l in R}


def test_transversals_reject_meeting_lines():
    pg = PG4
    a, b, c = (pg.index_of(v) for v in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    l1, l2 = pg.line_through(a, b), pg.line_through(a, c)
    l3 = pg.line(next(i for i in range(pg.n_lines) if pg.skew(pg.line(i), l1)))
    with pytest.raises(ValueError):
        pg.transversals(l1, l2, l3)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, PG9.n_points - 1), st.integers(0, PG9.n_points - 1))
def test_line_symmetry_property(i, j):
    if i == j:
        return
    line = PG9.line_through(i, j)
    for a, b in itertools.combinations(line.points[:4], 2):
        assert PG9.line_through(a, b) == line
