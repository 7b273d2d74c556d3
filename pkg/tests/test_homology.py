import pytest

from lefhopf import corpus
from lefhopf.exactla import Matrix
from lefhopf.homology import (
    ChainMapError,
    boundary_matrices,
    chain_map,
    check_subdivision,
    homology,
    induced_on_homology,
    induced_selfmap,
    pair_sequence,
    selfmap_chain,
    subdivision_equivalence,
)
from lefhopf.scomplex import (
    CarrierComplex,
    GeoSelfMap,
    SimplicialMap,
    barycentric_subdivide,
    cycle,
    identity,
    rp2_6,
    simplex,
    sphere,
    torus7,
    wedge_spheres,
)

import oracles


def _betti(X, rel=None, reduced=False):
    return homology(boundary_matrices(X, rel), reduced).betti()


def test_cycle3_boundary_columns():
    d1 = boundary_matrices(cycle(3)).boundary(1)
    for col in d1.columns():
        assert sorted(col) == [-1, 0, 1]
        assert sum(col) == 0


def test_torus_dd_zero():
    C = boundary_matrices(torus7())
    assert (C.boundary(1) @ C.boundary(2)).is_zero()
    assert C.is_complex()


def test_relative_disk_mod_boundary():
    D = simplex(2)
    A = D.subcomplex(s for s in D if len(s) <= 2)
    C = boundary_matrices(D, A)
    assert [len(b) for b in C.bases] == [0, 0, 1]
    assert _betti(D, A) == (0, 0, 1)


def test_relative_needs_subcomplex():
    with pytest.raises(ValueError):
        boundary_matrices(cycle(3), cycle(4))


@pytest.mark.parametrize(
    "X, expected",
    [(cycle(3), (1, 1)), (torus7(), (1, 2, 1)), (rp2_6(), (1, 0, 0)), (sphere(3), (1, 0, 0, 1))],
    ids=["cycle3", "torus7", "rp2_6", "sphere3"],
)
def test_betti_numbers(X, expected):
    assert _betti(X) == expected
    assert oracles.betti(X.maximal_simplices) == expected


def test_rp2_boundary_ranks():
    from lefhopf.exactla import rank

    C = boundary_matrices(rp2_6())
    assert rank(C.boundary(2)) == 10
    assert rank(C.boundary(1)) == 5


def test_reduced_homology():
    assert _betti(sphere(0), reduced=True) == (1,)
    assert _betti(sphere(2), reduced=True) == (0, 0, 1)
    assert _betti(simplex(3), reduced=True) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        homology(boundary_matrices(simplex(2), simplex(0)), True)


def test_chain_map_identity():
    F_ = chain_map(identity(torus7()))
    for n, M in enumerate(F_.matrices):
        assert M == Matrix.identity(M.nrows)
    assert F_.commutes()


def test_chain_map_edge_swap_sign():
    F_ = chain_map(corpus.edge_swap())
    assert F_.degree(1).tolist() == [[-1]]


def test_chain_map_projection_kills_foreign_edges():
    W = wedge_spheres(1, 2)
    p1 = W.summands[0].projection
    F_ = chain_map(p1)
    src = F_.source.bases[1]
    for j, e in enumerate(src):
        col = F_.degree(1).column(j)
        if any(v.startswith("s2:") for v in e):
            assert not any(col)
        else:
            assert sorted(col).count(0) == len(col) - 1


def test_chain_map_pair_not_preserved():
    C = cycle(3)
    f = corpus.cycle_rotation()
    A = C.subcomplex([("c0",)])
    with pytest.raises(ChainMapError):
        chain_map(f, A, A)
    with pytest.raises(ChainMapError):
        chain_map(f, A, None)


def test_induced_identity_and_circle_maps():
    ind = induced_selfmap(identity(torus7()))
    assert [m.tolist() for m in ind.matrices] == [[[1]], [[1, 0], [0, 1]], [[1]]]
    assert induced_selfmap(corpus.cycle_reflection()).matrix(1).tolist() == [[-1]]
    assert induced_selfmap(corpus.cycle_rotation()).matrix(1).tolist() == [[1]]


def test_homology_reps_are_cycles():
    for X in (torus7(), rp2_6(), wedge_spheres(2, 2).wedge):
        C = boundary_matrices(X)
        h = homology(C)
        for n in range(C.top + 1):
            for z in h.reps(n):
                assert not any(C.boundary(n).apply(z))


def test_subdivision_vertex_and_edge():
    S = barycentric_subdivide(simplex(1))
    phi = subdivision_equivalence(S)
    D = boundary_matrices(S.refined)
    idx = D.index(1)
    col = phi.degree(1).column(0)
    # [v0, m] + [m, v1], written in the sorted basis ("<v0+v1>", "v0"), ("<v0+v1>", "v1")
    assert col[idx[("<v0+v1>", "v0")]] == -1
    assert col[idx[("<v0+v1>", "v1")]] == 1
    # vertices go to the refined vertices sitting on them
    d0 = D.index(0)
    assert phi.degree(0).column(0)[d0[("v0",)]] == 1
    assert phi.degree(0).column(1)[d0[("v1",)]] == 1


def test_subdivision_triangle_is_signed_sum_of_flags():
    S = barycentric_subdivide(simplex(2))
    phi = subdivision_equivalence(S)
    col = phi.degree(2).column(0)
    assert sorted(abs(x) for x in col) == [1] * 6
    assert phi.commutes()


@pytest.mark.parametrize("X", [cycle(3), simplex(2), torus7(), rp2_6(), sphere(2), wedge_spheres(1, 3).wedge])
def test_check_subdivision(X):
    check_subdivision(barycentric_subdivide(X))


def test_selfmap_chain_first_vertex_map():
    X = simplex(1)
    S = barycentric_subdivide(X)
    vm = {w: sorted(S.coords[w])[0] for w in S.refined.vertices}
    g = GeoSelfMap(S, SimplicialMap(S.refined, X, vm))
    ind = induced_selfmap(g)
    assert ind.matrix(0).tolist() == [[1]]
    assert selfmap_chain(g).commutes()


def test_selfmap_chain_degree_two_on_sd_cycle():
    X = cycle(3)
    S = barycentric_subdivide(X)
    ring = ["c0", "<c0+c1>", "c1", "<c1+c2>", "c2", "<c0+c2>"]
    vm = {w: X.vertices[k % 3] for k, w in enumerate(ring)}
    g = GeoSelfMap(S, SimplicialMap(S.refined, X, vm))
    assert induced_selfmap(g).matrix(1).tolist() == [[2]]


def test_selfmap_chain_identity_carried():
    X = torus7()
    g = GeoSelfMap(CarrierComplex.identity(X), identity(X))
    assert all(m == Matrix.identity(m.nrows) for m in induced_selfmap(g).matrices)


def test_wrap_maps_degree():
    for d in (-2, -1, 2, 3):
        assert induced_selfmap(corpus.wrap_map(d)).matrix(1).tolist() == [[d]]


def test_pair_sequence_shapes():
    c = corpus.pair_corpus()[0]
    seq = pair_sequence(c.f, c.sub)
    assert seq.top == 2
    assert seq.graded_traces() == {"sub": (1, 1, 0), "total": (1, 0, 0), "rel": (0, 0, 1)}


def test_induced_map_between_different_spaces():
    W = wedge_spheres(1, 2)
    e1 = W.summands[0].inclusion
    ind = induced_on_homology(chain_map(e1))
    assert ind.matrix(1).shape == (2, 1)
    assert sorted(map(abs, ind.matrix(1).column(0))) == [0, 1]
