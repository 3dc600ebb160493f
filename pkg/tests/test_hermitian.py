import numpy as np
import pytest

from hermcode.errors import InvariantViolation
from hermcode.hermitian import HermitianSurface, LineKind, PlaneKind, build_surface


def _on_surface_oracle(X, coords):
    F, t = X.field, X.t
    acc = 0
    for c in coords:
        acc = F.add(acc, F.pow(int(c), t + 1))
    return acc == 0


@pytest.mark.parametrize("t,n", [(2, 45), (3, 280)])
def test_surface_size_and_membership(t, n):
    X = build_surface(t)
    assert X.n == n == (t * t + 1) * (t**3 + 1)
    for p in range(X.pg.n_points):
        assert X.contains(p) == _on_surface_oracle(X, X.pg.points[p])


def test_tangent_plane_example_t2(X2):
    F = X2.field
    w = F.generator
    p = X2.pg.index_of((1, w, 0, 0))
    assert X2.contains(p)
    h = X2.tangent_plane(p)
    assert h.coeffs == (1, F.mul(w, w), 0, 0) == (1, 3, 0, 0)
    with pytest.raises(ValueError):
        X2.tangent_plane(X2.pg.index_of((1, 0, 0, 0)))


@pytest.mark.parametrize("t", [2, 3])
def test_tangent_plane_is_the_unique_large_section_through_p(t):
    X = build_surface(t)
    big = t**3 + t * t + 1
    sizes = X.plane_section_sizes
    for p in X.points[:: max(1, X.n // 60)]:
        h = X.tangent_plane(int(p))
        assert sizes[h.index] == big
        assert X.pg.incidence[h.index, p]
        # any other plane through p meeting X in big points has another centre
        assert X.tangency_point[h.index] == p


@pytest.mark.parametrize("t", [2, 3])
def test_plane_sections(t):
    X = build_surface(t)
    sizes = X.plane_section_sizes
    assert set(sizes.tolist()) == {t**3 + 1, t**3 + t * t + 1}
    assert int((sizes == t**3 + t * t + 1).sum()) == X.n
    for h in range(0, X.pg.n_points, 37):
        sec = X.classify_plane(h)
        assert sec.kind is (PlaneKind.TANGENT if X.is_tangent_plane(h) else PlaneKind.NON_TANGENT)


@pytest.mark.parametrize("t", [2, 3])
def test_tangent_section_is_a_pencil(t):
    X = build_surface(t)
    for p in X.points[:10]:
        h = X.tangent_plane(int(p))
        centre, lines = X.decompose_tangent_section(h)
        assert centre == p
        assert len(lines) == t + 1
        covered = set().union(*(set(l.points) for l in lines))
        assert covered == set(X.classify_plane(h).points)
        assert all(X.classify_line(l) is LineKind.GENERATOR for l in lines)
    non = next(h for h in range(X.pg.n_points) if not X.is_tangent_plane(h))
    with pytest.raises(ValueError):
        X.decompose_tangent_section(non)


@pytest.mark.parametrize("t", [2, 3])
def test_every_line_meets_x_in_allowed_sizes(t):
    X = build_surface(t)
    assert set(X.line_section_sizes.tolist()) == {1, t + 1, t * t + 1}


@pytest.mark.parametrize("t", [2, 3])
def test_line_census_at_every_point(t):
    X = build_surface(t)
    expected = {LineKind.GENERATOR: t + 1, LineKind.TANGENT: t * t - t, LineKind.SECANT: t**4}
    for p in X.points:
        assert X.line_census(int(p)) == expected


@pytest.mark.parametrize("t,gens", [(2, 27), (3, 112)])
def test_generator_count(t, gens):
    X = build_surface(t)
    G = X.all_generators()
    assert len(G) == gens == (t**3 + 1) * (t + 1)
    for g in G:
        assert all(X.contains(p) for p in g.points)


def test_line_size_outside_spectrum_is_an_invariant_violation(X2):
    with pytest.raises(InvariantViolation):
        X2._kind_of_size(0)
    with pytest.raises(InvariantViolation):
        X2._kind_of_size(4)


def test_unsupported_t():
    with pytest.raises(ValueError):
        HermitianSurface(6)
    with pytest.raises(ValueError):
        HermitianSurface(5)


def test_build_surface_is_cached():
    assert build_surface(2) is build_surface(2)


def test_line_census_text(X2):
    text = X2.format_line_census()
    rows = text.splitlines()
    assert rows[0] == "# t=2 q=4 n=45"
    assert len(rows) == 2 + 45
    assert rows[2].endswith(" 3 2 16")


def test_bitmask_matches_mask(X2):
    bits = [(X2.bitmask >> i) & 1 for i in range(X2.pg.n_points)]
    assert np.array_equal(np.array(bits, dtype=bool), X2.mask)
