"""Fixed points of piecewise-affine selfmaps and their indices.

Each open cell of the subdivision is solved exactly for f(x) = x. At a
non-degenerate fixed point the map is affine nearby, and the index is the
sign of det(I - D) for its linear part D in the carrier's tangent coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactla import ONE, ZERO, Matrix, det, rank, rref_decompose, solve_modulo
from .scomplex import (
    CarrierComplex,
    GeoSelfMap,
    Simplex,
    SimplicialMap,
    SubdivisionError,
    barycentric_subdivide,
    barycenter_label,
    subdivision_coords,
)
from .lefschetz import AxiomReport, lefschetz


class HypothesisViolation(Exception):
    """The map is outside the hypotheses of the Lefschetz-Hopf theorem."""


class NonIsolatedFixedPoints(HypothesisViolation):
    pass


class GeneralPositionError(HypothesisViolation):
    pass


class DegenerateFixedPoint(HypothesisViolation):
    pass


@dataclass(frozen=True, eq=False)
class FixedPoint:
    cell: Simplex
    carrier: Simplex
    coords: tuple[Fraction, ...]  # barycentric, aligned with carrier
    cell_weights: tuple[Fraction, ...]  # aligned with cell
    D: Matrix

    def point(self) -> dict[str, Fraction]:
        return {v: x for v, x in zip(self.carrier, self.coords) if x}

    def __repr__(self):
        body = ", ".join("%s=%s" % (v, x) for v, x in zip(self.carrier, self.coords))
        return "FixedPoint(%s)" % body


@dataclass(frozen=True)
class IndexReport:
    fixed_points: tuple[tuple[FixedPoint, int], ...]
    total: int
    lefschetz_crosscheck: Fraction

    @property
    def indices(self) -> list[int]:
        return [i for _, i in self.fixed_points]


def _affine_on_carrier(g: GeoSelfMap, tau: Simplex, sigma: Simplex) -> Matrix | None:
    """Matrix T with f(x) = T x in sigma's barycentric coordinates on the top cell tau.

    None when some vertex of tau maps outside sigma.
    """
    S = g.subdivision
    pos = {v: i for i, v in enumerate(sigma)}
    imgs = [g.vertex_map(w) for w in tau]
    if any(v not in pos for v in imgs):
        return None
    P = Matrix([[S.coords[w].get(v, ZERO) for w in tau] for v in sigma])
    Y = Matrix([[ONE if imgs[j] == v else ZERO for j in range(len(tau))] for v in sigma])
    Pinv = _inverse(P)
    if Pinv is None:
        raise SubdivisionError("cell %r is degenerate in its carrier" % (tau,))
    return Y @ Pinv


def _inverse(M: Matrix) -> Matrix | None:
    n = M.nrows
    cols = []
    for j in range(n):
        e = tuple(ONE if i == j else ZERO for i in range(n))
        c = solve_modulo(e, M.columns(), [])
        if c is None:
            return None
        cols.append(c)
    return Matrix.from_columns(cols, n)


def _tangent(T: Matrix) -> Matrix:
    """Linear part of T on the directions e_i - e_0, in coordinates 1..m."""
    m = T.nrows - 1
    cols = []
    for i in range(1, m + 1):
        d = tuple(T[r, i] - T[r, 0] for r in range(1, m + 1))
        cols.append(d)
    return Matrix.from_columns(cols, m) if m else Matrix.zeros(0, 0)


def _polytope_meets_open_orthant(M: Matrix, rhs: tuple) -> bool:
    """Whether {t : M t = rhs, t > 0} is nonempty, for tiny column counts.

    The set {t >= 0, M t = rhs} is a polytope whose vertices are basic
    solutions; the average of those vertices lies in its relative interior,
    so it is strictly positive iff any point is.
    """
    n = M.ncols
    r = rank(M)
    verts = set()
    for cols in itertools.combinations(range(n), r):
        sub = [M.column(j) for j in cols]
        c = solve_modulo(rhs, sub, [])
        if c is None or any(x < 0 for x in c):
            continue
        t = [ZERO] * n
        for j, x in zip(cols, c):
            t[j] = x
        if M.apply(t) == rhs:
            verts.add(tuple(t))
    if not verts:
        return False
    avg = [sum(v[j] for v in verts) / len(verts) for j in range(n)]
    return all(x > 0 for x in avg)


def _cell_system(g: GeoSelfMap, tau: Simplex) -> tuple[Matrix, tuple]:
    S = g.subdivision
    bverts = g.base.vertices
    rows = []
    for b in bverts:
        rows.append([S.coords[w].get(b, ZERO) - (ONE if g.vertex_map(w) == b else ZERO) for w in tau])
    rows.append([ONE] * len(tau))
    rhs = (ZERO,) * len(bverts) + (ONE,)
    return Matrix(rows, len(tau)), rhs


def _local_linear_part(g: GeoSelfMap, tau: Simplex, sigma: Simplex) -> Matrix:
    S = g.subdivision
    p = len(sigma) - 1
    if len(tau) - 1 == p:
        tops = [tau]
    else:
        ts = set(tau)
        tops = [t for t in S.refined.cells(p) if ts <= set(t) and S.carriers[t] == sigma]
    if not tops:
        raise GeneralPositionError("no top-dimensional cell around fixed cell %r" % (tau,))
    Ts = [_affine_on_carrier(g, t, sigma) for t in tops]
    if any(T is None for T in Ts) or any(T != Ts[0] for T in Ts[1:]):
        raise GeneralPositionError("map is not affine near the fixed point in cell %r" % (tau,))
    return _tangent(Ts[0])


def enumerate_fixed_points(g: GeoSelfMap) -> list[FixedPoint]:
    """Fixed points, one per open refined cell that contains one.

    Raises NonIsolatedFixedPoints before any general-position complaint, so
    the identity map reports the more informative error.
    """
    S = g.subdivision
    maximal = set(g.base.maximal_simplices)
    candidates = []
    for tau in S.refined:
        M, rhs = _cell_system(g, tau)
        if rref_decompose(M).kernel_basis:
            if _polytope_meets_open_orthant(M, rhs):
                raise NonIsolatedFixedPoints("fixed points fill a positive-dimensional set in cell %r" % (tau,))
            continue
        t = solve_modulo(rhs, M.columns(), [])
        if t is not None and all(x > 0 for x in t):
            candidates.append((tau, t))
    found = []
    for tau, t in candidates:
        sigma = S.carriers[tau]
        pt = S.point(tau, t)
        if sigma not in maximal:
            raise GeneralPositionError("fixed point %r lies inside the non-maximal simplex %r" % (pt, sigma))
        D = _local_linear_part(g, tau, sigma)
        found.append(FixedPoint(tau, sigma, tuple(pt.get(v, ZERO) for v in sigma), tuple(t), D))
    return found


def local_index(g: GeoSelfMap, p: FixedPoint) -> int:
    if p.carrier not in set(g.base.maximal_simplices):
        raise GeneralPositionError("fixed point is not interior to a maximal simplex")
    n = p.D.nrows
    d = det(Matrix.identity(n) - p.D)
    if d == 0:
        raise DegenerateFixedPoint("det(I - D) = 0 at %r" % (p,))
    return 1 if d > 0 else -1


def total_index(g: GeoSelfMap) -> IndexReport:
    pts = enumerate_fixed_points(g)
    pairs = tuple((p, local_index(g, p)) for p in pts)
    total = sum(i for _, i in pairs)
    return IndexReport(pairs, total, lefschetz(g).L)


def verify_normalization(g: GeoSelfMap):
    L = lefschetz(g).L
    try:
        rep = total_index(g)
    except HypothesisViolation as e:
        return AxiomReport(
            "normalization", None, L, False, {"reason": type(e).__name__}, skipped=True, note=str(e)
        )
    return AxiomReport(
        "normalization",
        Fraction(rep.total),
        L,
        Fraction(rep.total) == L,
        {"fixed_points": len(rep.fixed_points), "indices": rep.indices},
    )


def refine_selfmap(g: GeoSelfMap) -> tuple[GeoSelfMap, CarrierComplex]:
    """The same map of |X|, rebuilt on Sd K over Sd X.

    Valid when every refined simplex's barycenter goes to the barycenter of
    its image, which holds when each image vertex is hit equally often.
    Returns the new map and Sd X (for translating points back to X).
    """
    S = g.subdivision
    sdX = barycentric_subdivide(g.base)
    sdK = barycentric_subdivide(S.refined)
    coords = {}
    vm = {}
    for tau in S.refined:
        lab = barycenter_label(tau)
        m = len(tau)
        pt = S.point(tau, [Fraction(1, m)] * m)
        coords[lab] = subdivision_coords(pt, g.base)
        imgs = [g.vertex_map(w) for w in tau]
        counts = {v: imgs.count(v) for v in imgs}
        if len(set(counts.values())) != 1:
            raise SubdivisionError("barycenter of %r does not map to a barycenter" % (tau,))
        vm[lab] = barycenter_label(tuple(sorted(counts)))
    refined = sdK.refined.renamed("sd(%s)" % (S.refined.name or "?"))
    new = CarrierComplex(refined, sdX.refined, coords)
    f = SimplicialMap(refined, sdX.refined, vm)
    return GeoSelfMap(new, f, "sd(%s)" % (g.name or "?")), sdX


def to_base_point(point: dict[str, Fraction], sd: CarrierComplex) -> dict[str, Fraction]:
    """Coordinates in sd.base of a point given in sd.refined coordinates."""
    out: dict[str, Fraction] = {}
    for w, t in point.items():
        for b, x in sd.coords[w].items():
            out[b] = out.get(b, ZERO) + t * x
    return {b: x for b, x in out.items() if x}
