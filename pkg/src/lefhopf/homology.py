"""Simplicial chains and rational homology.

Everything is computed in explicit bases: a chain in degree n is a vector
indexed by the n-simplices (minus those of a subcomplex, for relative
chains), and a homology class is carried by a chosen cycle representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactla import (
    ONE,
    ZERO,
    Matrix,
    ModuloSolver,
    Vector,
    column_basis,
    rank,
    rref_decompose,
    solve_modulo_many,
)
from .scomplex import (
    CarrierComplex,
    Complex,
    GeoSelfMap,
    Simplex,
    SimplicialMap,
    SimplicialMapError,
    SubdivisionError,
    faces,
    identity,
)


class ChainMapError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ChainComplex:
    complex: Complex
    sub: Complex | None
    bases: tuple[tuple[Simplex, ...], ...]
    boundaries: tuple[Matrix, ...]
    augmentation: Matrix | None

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def rank(self, n: int) -> int:
        return len(self.bases[n]) if 0 <= n <= self.top else 0

    def boundary(self, n: int) -> Matrix:
        """d_n : C_n -> C_{n-1}; zero outside the stored range."""
        if 1 <= n <= self.top:
            return self.boundaries[n]
        return Matrix.zeros(self.rank(n - 1), self.rank(n))

    def index(self, n: int) -> dict[Simplex, int]:
        key = "_idx%d" % n
        d = self.__dict__.get(key)
        if d is None:
            d = {s: i for i, s in enumerate(self.bases[n])} if 0 <= n <= self.top else {}
            self.__dict__[key] = d
        return d

    @property
    def relative(self) -> bool:
        return self.sub is not None

    def is_complex(self) -> bool:
        """d_{n-1} d_n = 0 in every degree, including the augmentation."""
        for n in range(2, self.top + 1):
            if not (self.boundaries[n - 1] @ self.boundaries[n]).is_zero():
                return False
        if self.augmentation is not None and self.top >= 1:
            if not (self.augmentation @ self.boundaries[1]).is_zero():
                return False
        return True


def _sign_sort(images: list[str]) -> tuple[int, Simplex]:
    inv = sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])
    return (-1 if inv % 2 else 1), tuple(sorted(images))


def boundary_matrices(X: Complex, rel: Complex | None = None) -> ChainComplex:
    """Chain complex of X, or of (X, rel) with rel's simplices deleted.

    Cached, so equal inputs give the identical object.
    """
    return _boundary_matrices(X, rel)


@lru_cache(maxsize=512)
def _boundary_matrices(X: Complex, rel: Complex | None) -> ChainComplex:
    if rel is not None and not rel.is_subcomplex_of(X):
        raise ValueError("relative chains need a subcomplex")
    drop = rel.simplex_set if rel is not None else frozenset()
    bases = tuple(tuple(s for s in X.cells(n) if s not in drop) for n in range(X.dim + 1))
    idx = [{s: i for i, s in enumerate(b)} for b in bases]
    mats = [Matrix.zeros(0, len(bases[0]) if bases else 0)]
    for n in range(1, len(bases)):
        rows = [[ZERO] * len(bases[n]) for _ in bases[n - 1]]
        for j, s in enumerate(bases[n]):
            for i, face in enumerate(faces(s)):
                r = idx[n - 1].get(face)
                if r is not None:
                    rows[r][j] = ONE if i % 2 == 0 else -ONE
        mats.append(Matrix(rows, len(bases[n])))
    aug = None
    if rel is None and bases:
        aug = Matrix([[ONE] * len(bases[0])], len(bases[0]))
    return ChainComplex(X, rel, bases, tuple(mats), aug)


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    matrices: tuple[Matrix, ...]

    def degree(self, n: int) -> Matrix:
        if 0 <= n < len(self.matrices):
            return self.matrices[n]
        return Matrix.zeros(self.target.rank(n), self.source.rank(n))

    def commutes(self) -> bool:
        """d F = F d in every degree."""
        top = max(self.source.top, self.target.top)
        for n in range(1, top + 1):
            if self.target.boundary(n) @ self.degree(n) != self.degree(n - 1) @ self.source.boundary(n):
                return False
        return True

    def after(self, other: "ChainMap") -> "ChainMap":
        """self composed after other."""
        if other.target is not self.source:
            raise ChainMapError("chain maps are not composable")
        top = max(other.source.top, 0)
        return ChainMap(other.source, self.target, tuple(self.degree(n) @ other.degree(n) for n in range(top + 1)))


def chain_map(f: SimplicialMap, source_sub: Complex | None = None, target_sub: Complex | None = None) -> ChainMap:
    """Chain map of f, optionally as a map of pairs (X, source_sub) -> (Y, target_sub).

    An n-simplex goes to the sorted image simplex with the sign of the
    sorting permutation, or to 0 if its image is degenerate.
    """
    if source_sub is not None and target_sub is None:
        raise ChainMapError("a relative source needs a relative target")
    if source_sub is not None and not f.maps_into(source_sub, target_sub):
        raise ChainMapError("map does not preserve the pair")
    C = boundary_matrices(f.source, source_sub)
    D = boundary_matrices(f.target, target_sub)
    mats = []
    for n in range(C.top + 1):
        tidx = D.index(n)
        rows = [[ZERO] * C.rank(n) for _ in range(D.rank(n))]
        for j, s in enumerate(C.bases[n]):
            imgs = [f.vertex_map[v] for v in s]
            if len(set(imgs)) < len(imgs):
                continue
            sign, t = _sign_sort(imgs)
            i = tidx.get(t)
            if i is not None:
                rows[i][j] = ONE if sign > 0 else -ONE
        mats.append(Matrix._trusted(tuple(map(tuple, rows)), D.rank(n), C.rank(n)))
    return ChainMap(C, D, tuple(mats))


@dataclass(frozen=True, eq=False)
class HomologyBasis:
    chains: ChainComplex
    reduced: bool
    cycles: tuple[tuple[Vector, ...], ...]
    boundaries: tuple[tuple[Vector, ...], ...]

    @property
    def top(self) -> int:
        return self.chains.top

    def betti(self, n: int | None = None):
        if n is None:
            return tuple(len(c) for c in self.cycles)
        return len(self.cycles[n]) if 0 <= n <= self.top else 0

    def reps(self, n: int) -> tuple[Vector, ...]:
        return self.cycles[n] if 0 <= n <= self.top else ()

    def bounds(self, n: int) -> tuple[Vector, ...]:
        return self.boundaries[n] if 0 <= n <= self.top else ()

    def euler(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti()))

    def coordinates(self, n: int, chains: list[Vector]) -> Matrix:
        """Columns: coordinates of the classes of the given n-cycles."""
        reps = self.reps(n)
        if not chains:
            return Matrix.zeros(len(reps), 0)
        key = "_solver%d" % n
        solver = self.__dict__.get(key)
        if solver is None:
            solver = self.__dict__[key] = ModuloSolver(reps, self.bounds(n), self.chains.rank(n))
        sols = [solver.solve(c) for c in chains]
        if any(c is None for c in sols):
            raise ChainMapError("chain in degree %d is not a cycle of the target" % n)
        return Matrix.from_columns(sols, len(reps)) if reps else Matrix.zeros(0, len(chains))


@lru_cache(maxsize=512)
def homology(C: ChainComplex, reduced: bool = False) -> HomologyBasis:
    """Cycle representatives per degree, chosen by first-pivot elimination."""
    if reduced and C.relative:
        raise ValueError("reduced homology of a relative complex is not defined here")
    cycles, bounds = [], []
    for n in range(C.top + 1):
        if n == 0:
            dz = C.augmentation if reduced else Matrix.zeros(0, C.rank(0))
        else:
            dz = C.boundary(n)
        Z = list(rref_decompose(dz).kernel_basis)
        B = list(rref_decompose(C.boundary(n + 1)).image_basis) if n < C.top else []
        reps = []
        if Z:
            M = Matrix.from_columns(B + Z, C.rank(n))
            piv = rref_decompose(M).pivot_cols
            reps = [Z[p - len(B)] for p in piv if p >= len(B)]
        if len(reps) != len(Z) - len(B):
            raise ArithmeticError("inconsistent homology rank in degree %d" % n)
        cycles.append(tuple(reps))
        bounds.append(tuple(B))
    return HomologyBasis(C, reduced, tuple(cycles), tuple(bounds))


@dataclass(frozen=True, eq=False)
class InducedMap:
    matrices: tuple[Matrix, ...]

    def matrix(self, n: int) -> Matrix:
        return self.matrices[n] if 0 <= n < len(self.matrices) else Matrix.zeros(0, 0)

    def traces(self) -> tuple[Fraction, ...]:
        return tuple(m.trace() for m in self.matrices)

    def lefschetz(self) -> Fraction:
        return sum(((-1) ** n * t for n, t in enumerate(self.traces())), ZERO)


def induced_on_homology(
    F: ChainMap,
    source: HomologyBasis | None = None,
    target: HomologyBasis | None = None,
    reduced: bool = False,
) -> InducedMap:
    """Matrix of F_* in each degree: column j = class of F(z_j) in the target basis."""
    source = homology(F.source, reduced) if source is None else source
    target = homology(F.target, reduced) if target is None else target
    top = max(source.top, target.top)
    mats = []
    for n in range(top + 1):
        Fn = F.degree(n)
        images = [Fn.apply(z) for z in source.reps(n)]
        mats.append(target.coordinates(n, images))
    return InducedMap(tuple(mats))


def induced_selfmap(f) -> InducedMap:
    """Induced map of a SimplicialMap selfmap or a GeoSelfMap on its own homology."""
    if isinstance(f, GeoSelfMap):
        F = selfmap_chain(f)
    elif isinstance(f, SimplicialMap):
        if not f.is_selfmap():
            raise SimplicialMapError("not a selfmap")
        F = chain_map(f)
    else:
        raise TypeError("expected a SimplicialMap or GeoSelfMap, got %r" % (type(f).__name__,))
    return induced_on_homology(F)


# ---------------------------------------------------------------- subdivisions

@lru_cache(maxsize=256)
def subdivision_equivalence(S: CarrierComplex) -> ChainMap:
    """Chain map phi: C(base) -> C(refined) with phi(sigma) carried by sigma.

    Degree 0 sends a base vertex to the refined vertex sitting on it; higher
    degrees solve d phi(sigma) = phi(d sigma) over the carried simplices.
    """
    C = boundary_matrices(S.base)
    D = boundary_matrices(S.refined)
    ridx0 = D.index(0)
    cols0 = []
    for v in C.bases[0]:
        col = [ZERO] * D.rank(0)
        col[ridx0[(S.vertex_at[v[0]],)]] = ONE
        cols0.append(tuple(col))
    mats = [Matrix.from_columns(cols0, D.rank(0))]
    for p in range(1, C.top + 1):
        prev = mats[p - 1]
        dK = D.boundary(p)
        pidx = D.index(p)
        cols = []
        for j, sigma in enumerate(C.bases[p]):
            rhs = prev.apply(C.boundary(p).column(j))
            cand = S.carried_by(sigma, p)
            B = [dK.column(pidx[t]) for t in cand]
            sol = solve_modulo_many([rhs], B, [], dim=D.rank(p - 1))[0] if B else None
            if sol is None:
                raise SubdivisionError("no carried chain for %r; the subdivision is invalid" % (sigma,))
            col = [ZERO] * D.rank(p)
            for t, c in zip(cand, sol):
                col[pidx[t]] = c
            cols.append(tuple(col))
        mats.append(Matrix.from_columns(cols, D.rank(p)) if cols else Matrix.zeros(D.rank(p), 0))
    return ChainMap(C, D, tuple(mats))


def check_subdivision(S: CarrierComplex) -> None:
    """Homological validation: equal Betti numbers and chi, phi a quasi-isomorphism."""
    hb = homology(boundary_matrices(S.base))
    hr = homology(boundary_matrices(S.refined))
    if hb.betti() != hr.betti()[: len(hb.betti())] or any(hr.betti()[len(hb.betti()):]):
        raise SubdivisionError("Betti numbers differ: base %s, refined %s" % (hb.betti(), hr.betti()))
    if S.base.euler_characteristic() != S.refined.euler_characteristic():
        raise SubdivisionError("Euler characteristics differ")
    phi = subdivision_equivalence(S)
    if not phi.commutes():
        raise SubdivisionError("subdivision chain map does not commute with the boundary")
    ind = induced_on_homology(phi, hb, hr)
    for n in range(hb.top + 1):
        m = ind.matrix(n)
        if m.nrows != m.ncols or rank(m) != m.nrows:
            raise SubdivisionError("subdivision does not induce an isomorphism in degree %d" % n)


def selfmap_chain(g: GeoSelfMap) -> ChainMap:
    """g_# after phi, a chain map C(X) -> C(X)."""
    phi = subdivision_equivalence(g.subdivision)
    return chain_map(g.vertex_map).after(phi)


# ---------------------------------------------------------------- pairs

@dataclass(frozen=True, eq=False)
class PairSequence:
    """The homology sequence of (X, A) with the maps induced by a pair selfmap.

    alpha[n]: H_n(A) -> H_n(X), beta[n]: H_n(X) -> H_n(X, A),
    delta[n]: H_n(X, A) -> H_{n-1}(A); f_sub, f_total, f_rel the selfmaps.
    """

    top: int
    h_sub: HomologyBasis
    h_total: HomologyBasis
    h_rel: HomologyBasis
    alpha: tuple[Matrix, ...]
    beta: tuple[Matrix, ...]
    delta: tuple[Matrix, ...]
    f_sub: tuple[Matrix, ...]
    f_total: tuple[Matrix, ...]
    f_rel: tuple[Matrix, ...]

    def graded_traces(self) -> dict[str, tuple[Fraction, ...]]:
        return {
            "sub": tuple(m.trace() for m in self.f_sub),
            "total": tuple(m.trace() for m in self.f_total),
            "rel": tuple(m.trace() for m in self.f_rel),
        }


def _pad(ind: InducedMap, top: int, rows_of, cols_of) -> tuple[Matrix, ...]:
    out = []
    for n in range(top + 1):
        m = ind.matrices[n] if n < len(ind.matrices) else None
        if m is None or m.shape != (rows_of(n), cols_of(n)):
            if m is not None and not m.is_zero():
                raise ArithmeticError("unexpected shape for induced map in degree %d" % n)
            m = Matrix.zeros(rows_of(n), cols_of(n))
        out.append(m)
    return tuple(out)


def pair_sequence(f: SimplicialMap, A: Complex) -> PairSequence:
    X = f.source
    if not f.is_selfmap():
        raise SimplicialMapError("pair_sequence needs a selfmap")
    if not A.is_subcomplex_of(X) or len(A) == 0:
        raise ValueError("A must be a nonempty subcomplex of X")
    if not f.maps_into(A, A):
        raise ChainMapError("map does not preserve the pair")
    N = X.dim
    CA, CX, CR = boundary_matrices(A), boundary_matrices(X), boundary_matrices(X, A)
    hA, hX, hR = homology(CA), homology(CX), homology(CR)
    incl = SimplicialMap(A, X, {v: v for v in A.vertices})
    proj = chain_map(identity(X), None, A)
    alpha = _pad(induced_on_homology(chain_map(incl), hA, hX), N, hX.betti, hA.betti)
    beta = _pad(induced_on_homology(proj, hX, hR), N, hR.betti, hX.betti)
    fA = _pad(induced_on_homology(chain_map(f.restrict(A)), hA, hA), N, hA.betti, hA.betti)
    fX = _pad(induced_on_homology(chain_map(f), hX, hX), N, hX.betti, hX.betti)
    fR = _pad(induced_on_homology(chain_map(f, A, A), hR, hR), N, hR.betti, hR.betti)

    delta = [Matrix.zeros(0, hR.betti(0))]
    for n in range(1, N + 1):
        images = []
        aidx = CA.index(n - 1)
        for z in hR.reps(n):
            full = [ZERO] * CX.rank(n)
            xidx = CX.index(n)
            for s, c in zip(CR.bases[n], z):
                full[xidx[s]] = c
            bz = CX.boundary(n).apply(full)
            restricted = [ZERO] * CA.rank(n - 1)
            for s, c in zip(CX.bases[n - 1], bz):
                if not c:
                    continue
                if s not in aidx:
                    raise ArithmeticError("relative cycle has boundary outside A")
                restricted[aidx[s]] = c
            images.append(tuple(restricted))
        delta.append(hA.coordinates(n - 1, images) if images else Matrix.zeros(hA.betti(n - 1), 0))
    return PairSequence(N, hA, hX, hR, alpha, beta, tuple(delta), fA, fX, fR)


def image_basis(M: Matrix) -> list[Vector]:
    return column_basis(M.columns(), M.nrows) if M.ncols else []
