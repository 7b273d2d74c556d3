from fractions import Fraction as F

import pytest

from lefhopf import corpus
from lefhopf.exactla import Matrix
from lefhopf.fixindex import (
    DegenerateFixedPoint,
    FixedPoint,
    GeneralPositionError,
    HypothesisViolation,
    NonIsolatedFixedPoints,
    enumerate_fixed_points,
    local_index,
    refine_selfmap,
    to_base_point,
    total_index,
    verify_normalization,
)
from lefhopf.lefschetz import lefschetz
from lefhopf.scomplex import GeoSelfMap, constant, identity, simplex, torus7

import oracles


def geo(f):
    return GeoSelfMap.from_simplicial(f)


def test_antipodal_has_no_fixed_points():
    assert enumerate_fixed_points(geo(corpus.antipodal())) == []
    r = total_index(geo(corpus.antipodal()))
    assert r.total == 0 and r.lefschetz_crosscheck == 0


def test_edge_swap_midpoint():
    g = geo(corpus.edge_swap())
    (p,) = enumerate_fixed_points(g)
    assert p.coords == (F(1, 2), F(1, 2))
    assert p.D.tolist() == [[-1]]
    assert local_index(g, p) == 1


def test_identity_is_non_isolated():
    with pytest.raises(NonIsolatedFixedPoints):
        enumerate_fixed_points(geo(identity(simplex(2))))
    with pytest.raises(NonIsolatedFixedPoints):
        enumerate_fixed_points(geo(identity(torus7())))


def test_triangle_rotation_barycenter():
    g = geo(corpus.triangle_rotation())
    (p,) = enumerate_fixed_points(g)
    assert p.coords == (F(1, 3),) * 3
    D = p.D
    assert (Matrix.identity(2) - D).rows and local_index(g, p) == 1
    from lefhopf.exactla import det

    assert det(Matrix.identity(2) - D) == 3
    assert total_index(g).total == 1


def test_degree_two_point_index():
    g = corpus.circle_map(2)
    (p,) = enumerate_fixed_points(g)
    (slope,) = p.D.tolist()[0]
    assert slope > 1
    assert local_index(g, p) == -1


@pytest.mark.parametrize("d", corpus.CIRCLE_DEGREES + (1,))
def test_circle_totals(d):
    g = corpus.circle_map(d)
    r = total_index(g)
    assert r.total == 1 - d
    assert len(r.fixed_points) == abs(d - 1)
    expected = -1 if d >= 2 else 1
    assert all(i == expected for i in r.indices)
    assert r.lefschetz_crosscheck == 1 - d


def test_fixed_points_are_fixed():
    for g in corpus.normalization_corpus():
        for p in enumerate_fixed_points(g):
            assert g.evaluate(p.point()) == p.point(), g.name
            assert all(x > 0 for x in p.cell_weights)
            assert sum(p.coords) == 1


def test_local_indices_are_units():
    for g in corpus.normalization_corpus():
        assert set(total_index(g).indices) <= {-1, 1}


@pytest.mark.parametrize("g", corpus.normalization_corpus(), ids=lambda g: g.name)
def test_normalization_holds(g):
    r = verify_normalization(g)
    assert not r.skipped
    assert r.holds and r.lhs == r.rhs


def test_wedge_map_total():
    g, W = corpus.wedge_circle_map()
    r = total_index(g)
    assert r.total == -4 == lefschetz(g).L
    assert r.indices == [-1, -1, -1, -1]


def test_identity_normalization_is_skipped():
    r = verify_normalization(geo(identity(simplex(2))))
    assert r.skipped and r.witnesses["reason"] == "NonIsolatedFixedPoints"
    assert r.status == "skip"


def test_fixed_vertex_is_general_position_violation():
    with pytest.raises(GeneralPositionError):
        enumerate_fixed_points(geo(constant(simplex(2), "v0")))
    with pytest.raises(GeneralPositionError):
        enumerate_fixed_points(corpus.wrap_map(2))
    assert issubclass(GeneralPositionError, HypothesisViolation)


def test_degenerate_fixed_point_rejected():
    g = geo(corpus.edge_swap())
    (p,) = enumerate_fixed_points(g)
    bad = FixedPoint(p.cell, p.carrier, p.coords, p.cell_weights, Matrix([[1]]))
    with pytest.raises(DegenerateFixedPoint):
        local_index(g, bad)


def _oracle_points(g):
    return [(dict(pt), i) for pt, i in oracles.scan_graph_fixed_points(g)]


def _enum_points(g):
    pts = [(p.point(), local_index(g, p)) for p in enumerate_fixed_points(g)]
    return sorted(pts, key=lambda x: sorted(x[0].items()))


@pytest.mark.parametrize(
    "g",
    [corpus.circle_map(d) for d in corpus.CIRCLE_DEGREES + (1,)]
    + [corpus.circle_map(d, repeat=2) for d in corpus.CIRCLE_DEGREES]
    + [corpus.wedge_circle_map()[0], geo(corpus.edge_swap())],
    ids=lambda g: g.name or "map",
)
def test_one_dimensional_oracle(g):
    assert _enum_points(g) == _oracle_points(g)


def test_one_dimensional_oracle_sees_fixed_vertex():
    pts = oracles.scan_graph_fixed_points(corpus.wrap_map(2))
    assert any(i is None for _, i in pts)


def _at_barycenter(p):
    # barycentric subdivision turns base barycenters into vertices
    vals = set(p.point().values())
    return len(vals) == 1


INVARIANCE_MAPS = (
    [corpus.circle_map(d) for d in corpus.CIRCLE_DEGREES]
    + [corpus.circle_map(d, repeat=2) for d in corpus.CIRCLE_DEGREES]
    + [corpus.wedge_circle_map()[0], geo(corpus.edge_swap()), geo(corpus.triangle_rotation())]
)


@pytest.mark.parametrize("g", INVARIANCE_MAPS, ids=lambda g: g.name or "map")
def test_subdivision_invariance(g):
    h, sdX = refine_selfmap(g)
    assert lefschetz(h).L == lefschetz(g).L
    before = _enum_points(g)
    if any(_at_barycenter(p) for p in enumerate_fixed_points(g)):
        with pytest.raises(GeneralPositionError):
            enumerate_fixed_points(h)
        return
    after = sorted(
        ((to_base_point(p.point(), sdX), local_index(h, p)) for p in enumerate_fixed_points(h)),
        key=lambda x: sorted(x[0].items()),
    )
    assert before == after


def test_subdivision_invariance_has_general_cases():
    ok = [g for g in INVARIANCE_MAPS if not any(_at_barycenter(p) for p in enumerate_fixed_points(g))]
    assert len(ok) >= 4
    for d in corpus.CIRCLE_DEGREES:
        g = corpus.circle_map(d, repeat=2)
        assert not any(_at_barycenter(p) for p in enumerate_fixed_points(g)), g.name
