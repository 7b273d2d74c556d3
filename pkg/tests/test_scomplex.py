from fractions import Fraction as F

import pytest

from lefhopf import corpus
from lefhopf.scomplex import (
    CarrierComplex,
    Complex,
    ComplexError,
    GeoSelfMap,
    SimplicialMap,
    SimplicialMapError,
    SubdivisionError,
    barycentric_subdivide,
    build_complex,
    compose,
    constant,
    cycle,
    faces,
    generate,
    identity,
    octahedron,
    rp2_6,
    simplex,
    simplicial_maps,
    sphere,
    subdivision_coords,
    suspend,
    suspend_map,
    torus7,
    validate_simplicial_map,
    wedge_spheres,
    wedge_sum,
)


def test_triangle_boundary():
    X = build_complex([["a", "b"], ["b", "c"], ["a", "c"]])
    assert X.f_vector == (3, 3)
    assert X.dim == 1


def test_tetrahedron_boundary_count():
    X = build_complex([["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]])
    assert len(X) == 14


def test_build_rejects_bad_input():
    with pytest.raises(ComplexError):
        build_complex([["a", "a"]])
    with pytest.raises(ComplexError):
        build_complex([])


def test_vertex_order_is_lexicographic():
    X = build_complex([["b", "a"], ["c", "a"]])
    assert X.vertices == ("a", "b", "c")
    assert ("a", "b") in X and ("b", "a") in X


def test_face_closure():
    for X in [torus7(), rp2_6(), octahedron(), sphere(3), suspend(cycle(4))]:
        S = X.simplex_set
        for s in X:
            assert all(f in S for f in faces(s))


def test_generators():
    assert cycle(6).euler_characteristic() == 0
    W = generate("wedge_spheres", 1, 3)
    assert W.f_vector == (7, 9)
    assert W.euler_characteristic() == -2
    assert torus7().f_vector == (7, 21, 14)
    assert rp2_6().f_vector == (6, 15, 10)
    assert sphere(2).f_vector == (4, 6, 4)
    assert simplex(3).f_vector == (4, 6, 4, 1)
    assert octahedron().f_vector == (6, 12, 8)
    with pytest.raises(ComplexError):
        cycle(2)
    with pytest.raises(ComplexError):
        generate("klein")
    with pytest.raises(ComplexError):
        generate("sphere")


def _link_is_cycle(X, v):
    link = [tuple(w for w in s if w != v) for s in X.cells(2) if v in s]
    deg = {}
    for a, b in link:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    # connected 2-regular graph
    if any(d != 2 for d in deg.values()):
        return False
    seen, stack = set(), [next(iter(deg))]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        stack += [b if a == u else a for a, b in link if u in (a, b)]
    return seen == set(deg)


@pytest.mark.parametrize("X", [torus7(), rp2_6()], ids=["torus7", "rp2_6"])
def test_closed_surfaces(X):
    for e in X.cells(1):
        assert sum(1 for t in X.cells(2) if set(e) <= set(t)) == 2
    for v in X.vertices:
        assert _link_is_cycle(X, v)


def test_suspension_counts():
    S = suspend(sphere(0))
    assert S.f_vector == (4, 4)
    S = suspend(cycle(3))
    assert S.f_vector == (5, 9, 6)
    assert S.euler_characteristic() == 2
    assert suspend_map(identity(cycle(3))) == identity(S)
    with pytest.raises(ComplexError):
        suspend(cycle(3), poles=("c0", "x"))


def test_suspension_poles_avoid_collisions():
    X = build_complex([["north", "south"]])
    S = suspend(X)
    assert len(S.vertices) == 4
    f = suspend_map(identity(X))
    assert f.source == S


def test_wedge_of_two_cycles():
    W, ws = wedge_sum([(cycle(3), "c0"), (cycle(3), "c0")])
    assert W.f_vector == (5, 6)
    e1, e2 = ws.summands[0].inclusion, ws.summands[1].inclusion
    p1, p2 = ws.summands[0].projection, ws.summands[1].projection
    assert compose(p1, e1) == identity(cycle(3))
    assert compose(p2, e1) == constant(cycle(3), "c0")
    assert compose(p1, e2) == constant(cycle(3), "c0")


def test_wedge_summands_meet_at_basepoint():
    ws = wedge_spheres(2, 3)
    images = [{s.inclusion(v) for v in s.complex.vertices} for s in ws.summands]
    for a in range(3):
        for b in range(a + 1, 3):
            assert images[a] & images[b] == {ws.basepoint}


def test_wedge_needs_basepoint():
    with pytest.raises(ComplexError):
        wedge_sum([(cycle(3), None)])
    with pytest.raises(ComplexError):
        wedge_sum([(cycle(3), "zz")])


def test_barycentric_subdivision_counts():
    assert barycentric_subdivide(simplex(1)).refined.f_vector == (3, 2)
    sd = barycentric_subdivide(cycle(3)).refined
    assert sd.f_vector == (6, 6)
    sd2 = barycentric_subdivide(simplex(2)).refined
    assert sd2.f_vector == (7, 12, 6)
    assert sd2.euler_characteristic() == 1


def test_barycentric_coordinates_and_carriers():
    S = barycentric_subdivide(simplex(1))
    assert S.coords["<v0+v1>"] == {"v0": F(1, 2), "v1": F(1, 2)}
    S2 = barycentric_subdivide(simplex(2))
    top = ("<v0+v1+v2>", "<v0+v1>", "v0")
    assert S2.carrier(tuple(sorted(top))) == ("v0", "v1", "v2")


def test_subdivision_coords_roundtrip():
    X = simplex(2)
    S = barycentric_subdivide(X)
    pt = {"v0": F(1, 2), "v1": F(1, 3), "v2": F(1, 6)}
    sd = subdivision_coords(pt, X)
    assert sum(sd.values()) == 1
    back = {}
    for w, t in sd.items():
        for b, x in S.coords[w].items():
            back[b] = back.get(b, 0) + t * x
    assert back == pt


def test_validate_simplicial_map():
    T = torus7()
    validate_simplicial_map({v: v for v in T.vertices}, T, T)
    C = cycle(3)
    validate_simplicial_map({"c0": "c1", "c1": "c2", "c2": "c0"}, C, C)
    C4 = cycle(4)
    with pytest.raises(SimplicialMapError):
        validate_simplicial_map({"c0": "c0", "c1": "c2", "c2": "c2", "c3": "c3"}, C4, C4)
    with pytest.raises(SimplicialMapError):
        validate_simplicial_map({"c0": "zz", "c1": "c1", "c2": "c2"}, C, C)
    with pytest.raises(SimplicialMapError):
        validate_simplicial_map({"c0": "c0"}, C, C)


def test_degenerate_images_allowed():
    f = constant(sphere(2), "v0")
    assert f.image(("v0", "v1", "v2")) == ("v0",)


def test_simplicial_maps_enumeration_small():
    D1 = simplex(1)
    maps = list(simplicial_maps(D1, D1))
    assert len(maps) == 4
    # every enumerated map validates
    C = cycle(3)
    for vm in simplicial_maps(C, C):
        SimplicialMap(C, C, vm)
    assert sum(1 for _ in simplicial_maps(C, C)) == 27


def test_carrier_complex_validation():
    X = simplex(1)
    K = build_complex([["v0", "m"], ["m", "v1"]])
    ok = CarrierComplex(K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}, "m": {"v0": F(1, 3), "v1": F(2, 3)}})
    assert ok.carrier(("m", "v0")) == ("v0", "v1")
    with pytest.raises(SubdivisionError):
        CarrierComplex(K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}, "m": {"v0": F(1, 2), "v1": F(1, 3)}})
    with pytest.raises(SubdivisionError):
        CarrierComplex(K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}, "m": {"v0": F(-1), "v1": F(2)}})
    with pytest.raises(SubdivisionError):
        CarrierComplex(K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}})
    with pytest.raises(SubdivisionError):
        CarrierComplex(K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}, "m": {"v0": 1}})
    with pytest.raises(SubdivisionError):
        CarrierComplex(
            K, X, {"v0": {"v0": 1}, "v1": {"v1": 1}, "m": {"v0": F(1, 2), "v1": F(1, 2)}}, {("m", "v0"): ("v0",)}
        )


def test_geo_selfmap_evaluate():
    g = corpus.circle_map(2)
    for w in g.subdivision.refined.vertices:
        assert g.evaluate(g.subdivision.coords[w]) == {g.vertex_map(w): 1}
    pt = {"c0": F(1, 2), "c1": F(1, 2)}
    img = g.evaluate(pt)
    assert sum(img.values()) == 1


def test_geo_selfmap_requires_matching_spaces():
    S = CarrierComplex.identity(cycle(3))
    with pytest.raises(SimplicialMapError):
        GeoSelfMap(S, identity(cycle(4)))


def test_relabel_keeps_structure():
    from lefhopf.scomplex import relabel

    X = relabel(cycle(3), {"c0": "z", "c1": "y", "c2": "x"})
    assert X.vertices == ("x", "y", "z")
    assert X.f_vector == (3, 3)
    assert isinstance(X, Complex)
