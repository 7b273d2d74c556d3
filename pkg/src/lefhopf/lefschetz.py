"""Lefschetz numbers, Euler characteristics, degrees, and identity checks.

Every check computes both sides of its identity independently from
homology and returns an :class:`AxiomReport`; nothing is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactla import ZERO, Matrix, rank, restricted_trace
from .homology import (
    boundary_matrices,
    chain_map,
    homology,
    induced_on_homology,
    induced_selfmap,
    pair_sequence,
    selfmap_chain,
)
from .scomplex import (
    Complex,
    ComplexError,
    GeoSelfMap,
    SimplicialMap,
    SimplicialMapError,
    WedgeStructure,
    compose,
    suspend_map,
)


@dataclass(frozen=True)
class LefschetzReport:
    traces: tuple[Fraction, ...]
    L: Fraction
    L_reduced: Fraction


@dataclass(frozen=True)
class EulerReport:
    chi: int
    chi_reduced: int
    combinatorial_chi: int
    betti: tuple[int, ...] = ()


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    dimension: int


@dataclass
class AxiomReport:
    kind: str
    lhs: Fraction | None
    rhs: Fraction | None
    holds: bool
    witnesses: dict[str, Any] = field(default_factory=dict)
    skipped: bool = False
    note: str = ""

    @property
    def status(self) -> str:
        return "skip" if self.skipped else ("holds" if self.holds else "fails")


def _integral(x: Fraction, what: str) -> Fraction:
    if Fraction(x).denominator != 1:
        raise ArithmeticError("%s = %s is not an integer" % (what, x))
    return Fraction(x)


def _graded_L(traces) -> Fraction:
    return sum(((-1) ** n * t for n, t in enumerate(traces)), ZERO)


def lefschetz(f: SimplicialMap | GeoSelfMap) -> LefschetzReport:
    traces = induced_selfmap(f).traces()
    L = _integral(_graded_L(traces), "L(f)")
    return LefschetzReport(traces, L, L - 1)


def _relative_L(f: SimplicialMap, A: Complex) -> Fraction:
    if not f.is_selfmap():
        raise SimplicialMapError("not a selfmap")
    if not A.is_subcomplex_of(f.source) or not f.maps_into(A, A):
        raise SimplicialMapError("map does not preserve the pair")
    ind = induced_on_homology(chain_map(f, A, A))
    return _integral(ind.lefschetz(), "L(f; X, A)")


def _L_or_zero(f: SimplicialMap, A: Complex) -> Fraction:
    # the empty complex has no homology
    return lefschetz(f.restrict(A)).L if len(A) else ZERO


def relative_lefschetz(f: SimplicialMap, A: Complex) -> Fraction:
    """L(f; X, A); raises ArithmeticError if it disagrees with L(f_X) - L(f_A)."""
    rel = _relative_L(f, A)
    diff = lefschetz(f).L - _L_or_zero(f, A)
    if rel != diff:
        raise ArithmeticError("relative Lefschetz number %s differs from L(f_X) - L(f_A) = %s" % (rel, diff))
    return rel


def euler(X: Complex) -> EulerReport:
    b = homology(boundary_matrices(X)).betti()
    chi = sum((-1) ** n * x for n, x in enumerate(b))
    comb = X.euler_characteristic()
    if chi != comb:
        raise ArithmeticError("homological chi %d differs from simplex count %d" % (chi, comb))
    return EulerReport(chi, chi - 1, comb, b)


def relative_euler(X: Complex, A: Complex) -> int:
    """Euler characteristic of H_*(X, A), which is reduced chi of X/A."""
    return homology(boundary_matrices(X, A)).euler()


def _reduced_induced(f):
    F = selfmap_chain(f) if isinstance(f, GeoSelfMap) else chain_map(f)
    if isinstance(f, SimplicialMap) and not f.is_selfmap():
        raise SimplicialMapError("degree needs a selfmap")
    return induced_on_homology(F, reduced=True), homology(F.source, True)


def degree(f: SimplicialMap | GeoSelfMap) -> DegreeReport:
    ind, h = _reduced_induced(f)
    b = h.betti()
    nz = [n for n, x in enumerate(b) if x]
    if len(nz) != 1 or b[nz[0]] != 1:
        raise ComplexError("reduced homology %s is not that of a sphere" % (b,))
    n = nz[0]
    d = _integral(ind.matrix(n)[0, 0], "deg(f)")
    return DegreeReport(int(d), n)


def wedge_degrees(f: SimplicialMap, W: WedgeStructure) -> list[int]:
    """deg(p_j f e_j) for each summand j."""
    if f.source != W.wedge or not f.is_selfmap():
        raise SimplicialMapError("map is not a selfmap of the wedge")
    out, dims = [], set()
    for s in W.summands:
        r = degree(compose(s.projection, compose(f, s.inclusion)))
        dims.add(r.dimension)
        out.append(r.degree)
    if len(dims) > 1:
        raise ComplexError("wedge summands are spheres of different dimensions %s" % sorted(dims))
    return out


def _sphere_dim(W: WedgeStructure) -> int:
    b = homology(boundary_matrices(W.summands[0].complex), True).betti()
    return next(n for n, x in enumerate(b) if x)


# ---------------------------------------------------------------- identities

def verify_cofibration(f: SimplicialMap, A: Complex) -> AxiomReport:
    """L(f) = L(f') + L(fbar) - 1, with L(fbar) = 1 + L(f; X, A)."""
    Lf = lefschetz(f).L
    Lsub = lefschetz(f.restrict(A)).L
    Lbar = 1 + _relative_L(f, A)
    rhs = Lsub + Lbar - 1
    return AxiomReport("cofibration", Lf, rhs, Lf == rhs, {"L(f)": Lf, "L(f')": Lsub, "L(fbar)": Lbar})


def verify_commutativity(f: SimplicialMap, g: SimplicialMap) -> AxiomReport:
    """L(gf) = L(fg) for f: X -> Y and g: Y -> X."""
    if f.target != g.source or g.target != f.source:
        raise SimplicialMapError("commutativity needs f: X -> Y and g: Y -> X")
    gf = lefschetz(compose(g, f)).L
    fg = lefschetz(compose(f, g)).L
    return AxiomReport("commutativity", gf, fg, gf == fg, {"L(gf)": gf, "L(fg)": fg})


def verify_triad(f: SimplicialMap, P: Complex, Q: Complex) -> AxiomReport:
    X = f.source
    if P.union(Q) != X:
        raise ComplexError("triad pieces do not cover the complex")
    if not (f.maps_into(P, P) and f.maps_into(Q, Q)):
        raise SimplicialMapError("map does not preserve both triad pieces")
    R = P.intersection(Q)
    Lf, LP, LQ = lefschetz(f).L, lefschetz(f.restrict(P)).L, lefschetz(f.restrict(Q)).L
    LR = _L_or_zero(f, R)
    rhs = LP + LQ - LR
    return AxiomReport(
        "triad", Lf, rhs, Lf == rhs,
        {"L(f_P)": LP, "L(f_Q)": LQ, "L(f_PQ)": LR, "proper": "simplicial triad"},
    )


def _exact_at(inc: Matrix, out: Matrix) -> bool:
    """Exactness of -> inc -> V -> out -> at V."""
    if inc.ncols and out.nrows and not (out @ inc).is_zero():
        return False
    return rank(inc) + rank(out) == inc.nrows


def verify_les_additivity(f: SimplicialMap, A: Complex) -> AxiomReport:
    """Trace additivity along the homology sequence of the pair (X, A).

    Checks exactness, that the induced maps commute with the sequence, the
    three short-exact-sequence trace splittings in every degree, and finally
    L(f_X) = L(f_A) + L(f; X, A).
    """
    seq = pair_sequence(f, A)
    N = seq.top
    a, b, d = seq.alpha, seq.beta, seq.delta
    fA, fX, fR = seq.f_sub, seq.f_total, seq.f_rel
    hA, hR = seq.h_sub.betti, seq.h_rel.betti

    # 0 -> H_N(A) -> H_N(X) -> H_N(X,A) -> H_{N-1}(A) -> ... -> H_0(X,A) -> 0
    maps = [Matrix.zeros(hA(N), 0)]
    for n in range(N, -1, -1):
        maps += [a[n], b[n]]
        maps.append(d[n] if n > 0 else Matrix.zeros(0, hR(0)))
    exact = all(_exact_at(maps[i], maps[i + 1]) for i in range(len(maps) - 1))

    commute = True
    for n in range(N + 1):
        commute &= fX[n] @ a[n] == a[n] @ fA[n]
        commute &= fR[n] @ b[n] == b[n] @ fX[n]
        if n > 0:
            commute &= fA[n - 1] @ d[n] == d[n] @ fR[n]

    def tr_on_image(T, M):
        return restricted_trace(T, M.columns()) if M.ncols else ZERO

    im_b = [tr_on_image(fR[n], b[n]) for n in range(N + 1)]
    im_a = [tr_on_image(fX[n], a[n]) for n in range(N + 1)]
    # im_d[n] is the image of delta_n, inside H_{n-1}(A)
    im_d = [tr_on_image(fA[n - 1], d[n]) if 0 < n <= N else ZERO for n in range(N + 2)]
    junctions = []
    for n in range(N + 1):
        junctions.append(("h%d" % n, fR[n].trace(), None if None in (im_b[n], im_d[n]) else im_b[n] + im_d[n]))
        junctions.append(("g%d" % n, fX[n].trace(), None if None in (im_a[n], im_b[n]) else im_a[n] + im_b[n]))
        nxt = im_d[n + 1] if n + 1 <= N else ZERO
        junctions.append(("f%d" % n, fA[n].trace(), None if None in (nxt, im_a[n]) else nxt + im_a[n]))
    split = all(lhs == rhs for _, lhs, rhs in junctions)

    LX = _graded_L(m.trace() for m in fX)
    LA = _graded_L(m.trace() for m in fA)
    LR = _graded_L(m.trace() for m in fR)
    holds = bool(exact and commute and split and LX == LA + LR)
    return AxiomReport(
        "les_additivity", LX, LA + LR, holds,
        {
            "L(f_A)": LA, "L(f; X, A)": LR, "exact": exact, "commutes": bool(commute),
            "junctions": [(k, l, r) for k, l, r in junctions],
        },
    )


def verify_suspension(f: SimplicialMap) -> AxiomReport:
    """Reduced L of the suspension is minus reduced L of f."""
    X = f.source
    if not f.is_selfmap():
        raise SimplicialMapError("suspension needs a selfmap")
    if X.basepoint is not None and f(X.basepoint) != X.basepoint:
        raise SimplicialMapError("suspension needs a based map")
    lhs = lefschetz(suspend_map(f)).L_reduced
    rhs = -lefschetz(f).L_reduced
    return AxiomReport("suspension", lhs, rhs, lhs == rhs)


def verify_wedge_n_spheres(f: SimplicialMap, W: WedgeStructure) -> AxiomReport:
    """Reduced L = (-1)^n times the sum of the summand degrees."""
    degs = wedge_degrees(f, W)
    n = _sphere_dim(W)
    lhs = lefschetz(f).L_reduced
    rhs = Fraction((-1) ** n * sum(degs))
    return AxiomReport("wedge_n_spheres", lhs, rhs, lhs == rhs, {"degrees": degs, "n": n})


def verify_homotopy_instance(f, g, note: str = "") -> AxiomReport:
    """L agrees on a pair the caller declares homotopic; the homotopy itself is not checked."""
    lf, lg = lefschetz(f).L, lefschetz(g).L
    return AxiomReport(
        "homotopy_instance", lf, lg, lf == lg, {},
        note=note or "homotopy between the two maps is supplied by the caller, not computed",
    )


def verify_identity(kind: str, **inputs) -> AxiomReport:
    if kind == "normalization":
        from .fixindex import verify_normalization

        return verify_normalization(**inputs)
    checks = {
        "cofibration": verify_cofibration,
        "commutativity": verify_commutativity,
        "triad": verify_triad,
        "les_additivity": verify_les_additivity,
        "suspension": verify_suspension,
        "wedge_n_spheres": verify_wedge_n_spheres,
        "homotopy_instance": verify_homotopy_instance,
    }
    if kind not in checks:
        raise ValueError("unknown identity kind %r" % (kind,))
    return checks[kind](**inputs)
