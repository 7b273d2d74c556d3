"""Finite abstract simplicial complexes and the maps between them.

Vertices are strings, totally ordered lexicographically; a simplex is the
sorted tuple of its vertices. That single order fixes every boundary sign.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from typing import Iterable, Iterator, Mapping, Sequence

from .exactla import Matrix, rank, solve_modulo

Simplex = tuple  # tuple[str, ...], sorted


class ComplexError(ValueError):
    pass


class SimplicialMapError(ValueError):
    pass


class SubdivisionError(ValueError):
    pass


def _labels(prefix: str, count: int) -> list[str]:
    # zero padding keeps lexicographic order equal to numeric order
    width = len(str(max(count - 1, 0)))
    return ["%s%0*d" % (prefix, width, i) for i in range(count)]


def faces(simplex: Simplex) -> list[Simplex]:
    """Codimension-one faces; face i omits vertex i."""
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))] if len(simplex) > 1 else []


def _closure(simplices: Iterable[Simplex]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        for k in range(1, len(s) + 1):
            out.update(itertools.combinations(s, k))
    return out


@dataclass(frozen=True)
class Complex:
    vertices: tuple[str, ...]
    simplices: tuple[tuple[Simplex, ...], ...]
    name: str = field(default="", compare=False)
    basepoint: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.basepoint is not None and self.basepoint not in self.vertex_set:
            raise ComplexError("basepoint %r is not a vertex" % (self.basepoint,))

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((self.vertices, self.simplices))
            self.__dict__["_hash"] = h
            return h

    @classmethod
    def from_simplices(cls, simplices: Iterable[Sequence[str]], name: str = "", basepoint=None) -> "Complex":
        """Complex on a face-closed family of simplices (closure is checked, not added)."""
        simps = {tuple(sorted(s)) for s in simplices}
        for s in simps:
            if len(set(s)) != len(s):
                raise ComplexError("repeated vertex in simplex %r" % (s,))
        missing = _closure(simps) - simps
        if missing:
            raise ComplexError("not face-closed; missing %r" % (sorted(missing)[0],))
        return cls._make(simps, name, basepoint)

    @classmethod
    def _make(cls, simps: set[Simplex], name: str = "", basepoint=None) -> "Complex":
        if not simps:
            return cls((), (), name, basepoint)
        top = max(len(s) for s in simps)
        graded = tuple(tuple(sorted(s for s in simps if len(s) == p + 1)) for p in range(top))
        vertices = tuple(s[0] for s in graded[0])
        return cls(vertices, graded, name, basepoint)

    @classmethod
    def empty(cls) -> "Complex":
        return cls((), ())

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    def __len__(self):
        return sum(len(g) for g in self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        for g in self.simplices:
            yield from g

    def __contains__(self, simplex) -> bool:
        """Membership of a vertex set, in any order."""
        return tuple(sorted(simplex)) in self.simplex_set

    @cached_property
    def simplex_set(self) -> frozenset:
        return frozenset(self)

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def cells(self, p: int) -> tuple[Simplex, ...]:
        return self.simplices[p] if 0 <= p < len(self.simplices) else ()

    def count(self, p: int) -> int:
        return len(self.cells(p))

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.simplices)

    def index(self, p: int) -> dict[Simplex, int]:
        cache = self.__dict__.setdefault("_index", {})
        if p not in cache:
            cache[p] = {s: i for i, s in enumerate(self.cells(p))}
        return cache[p]

    def euler_characteristic(self) -> int:
        """Alternating simplex count."""
        return sum((-1) ** p * n for p, n in enumerate(self.f_vector))

    @cached_property
    def maximal_simplices(self) -> tuple[Simplex, ...]:
        covered = set()
        for s in self:
            covered.update(faces(s))
        return tuple(s for s in self if s not in covered)

    def is_maximal(self, simplex) -> bool:
        return tuple(simplex) in set(self.maximal_simplices)

    def is_subcomplex_of(self, other: "Complex") -> bool:
        return self.simplex_set <= other.simplex_set

    def subcomplex(self, simplices: Iterable[Sequence[str]], name: str = "") -> "Complex":
        """Subcomplex generated by the given simplices of self."""
        gens = [tuple(sorted(s)) for s in simplices]
        for s in gens:
            if s not in self:
                raise ComplexError("%r is not a simplex of %s" % (s, self.name or "the complex"))
        return Complex._make(_closure(gens), name)

    def intersection(self, other: "Complex") -> "Complex":
        return Complex._make(set(self.simplex_set & other.simplex_set))

    def union(self, other: "Complex") -> "Complex":
        return Complex._make(set(self.simplex_set | other.simplex_set))

    def renamed(self, name: str, basepoint=None) -> "Complex":
        return Complex(self.vertices, self.simplices, name, basepoint if basepoint is not None else self.basepoint)

    def __repr__(self):
        return "Complex(%s f=%s)" % (self.name or "?", self.f_vector)


def build_complex(maximal_simplices: Iterable[Sequence[str]], name: str = "", basepoint=None) -> Complex:
    gens = [tuple(s) for s in maximal_simplices]
    if not gens:
        raise ComplexError("a complex needs at least one simplex")
    for s in gens:
        if not s:
            raise ComplexError("empty simplex")
        for v in s:
            if not isinstance(v, str):
                raise ComplexError("vertex labels must be strings, got %r" % (v,))
        if len(set(s)) != len(s):
            raise ComplexError("repeated vertex in simplex %r" % (s,))
    return Complex._make(_closure(tuple(sorted(s)) for s in gens), name, basepoint)


# ---------------------------------------------------------------- generators

def _data_complex(filename: str) -> Complex:
    text = resources.files("lefhopf.data").joinpath(filename).read_text(encoding="utf-8")
    raw = json.loads(text)
    return build_complex(raw["simplices"], name=raw["name"])


def simplex(n: int) -> Complex:
    if n < 0:
        raise ComplexError("simplex dimension must be >= 0")
    return build_complex([_labels("v", n + 1)], name="simplex:%d" % n, basepoint="v" + "0" * len(str(n)))


def sphere(n: int) -> Complex:
    """Boundary of the (n+1)-simplex."""
    if n < 0:
        raise ComplexError("sphere dimension must be >= 0")
    vs = _labels("v", n + 2)
    return build_complex(itertools.combinations(vs, n + 1), name="sphere:%d" % n, basepoint=vs[0])


def cycle(m: int) -> Complex:
    if m < 3:
        raise ComplexError("cycle needs at least 3 vertices")
    vs = _labels("c", m)
    return build_complex([(vs[i], vs[(i + 1) % m]) for i in range(m)], name="cycle:%d" % m, basepoint=vs[0])


def octahedron() -> Complex:
    """Boundary of the cross-polytope; vertices x+ x- y+ y- z+ z-."""
    tris = itertools.product(("x+", "x-"), ("y+", "y-"), ("z+", "z-"))
    return build_complex(tris, name="octahedron", basepoint="x+")


def torus7() -> Complex:
    return _data_complex("torus7.json")


def rp2_6() -> Complex:
    return _data_complex("rp2_6.json")


def wedge_spheres(n: int, k: int) -> "WedgeStructure":
    if n < 1 or k < 1:
        raise ComplexError("wedge_spheres needs n >= 1 and k >= 1")
    s = sphere(n)
    _, w = wedge_sum([(s, s.basepoint)] * k)
    return w


def generate(kind: str, *params: int) -> Complex:
    """Standard complexes by name: simplex n, sphere n, cycle m, wedge_spheres n k,
    wedge_circles k, octahedron, torus7, rp2_6."""
    makers = {
        "simplex": (simplex, 1),
        "sphere": (sphere, 1),
        "cycle": (cycle, 1),
        "wedge_spheres": (lambda n, k: wedge_spheres(n, k).wedge, 2),
        "wedge_circles": (lambda k: wedge_spheres(1, k).wedge, 1),
        "octahedron": (octahedron, 0),
        "torus7": (torus7, 0),
        "rp2_6": (rp2_6, 0),
    }
    if kind not in makers:
        raise ComplexError("unknown complex kind %r" % (kind,))
    fn, arity = makers[kind]
    if len(params) != arity:
        raise ComplexError("%s takes %d parameter(s), got %d" % (kind, arity, len(params)))
    return fn(*params)


# ---------------------------------------------------------------- maps

@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: Complex
    target: Complex
    vertex_map: Mapping[str, str]

    def __post_init__(self):
        vm = dict(self.vertex_map)
        object.__setattr__(self, "vertex_map", vm)
        missing = [v for v in self.source.vertices if v not in vm]
        if missing:
            raise SimplicialMapError("vertex map undefined on %r" % (missing[0],))
        for v in self.source.vertices:
            if vm[v] not in self.target.vertex_set:
                raise SimplicialMapError("image %r of vertex %r is not a vertex of the target" % (vm[v], v))
        for s in self.source:
            if len(s) > 1 and self.image(s) not in self.target:
                raise SimplicialMapError("image of simplex %r is %r, not a simplex of the target" % (s, self.image(s)))

    def __call__(self, v: str) -> str:
        return self.vertex_map[v]

    def image(self, s: Simplex) -> Simplex:
        return tuple(sorted({self.vertex_map[v] for v in s}))

    def is_selfmap(self) -> bool:
        return self.source == self.target

    def maps_into(self, A: Complex, B: Complex) -> bool:
        return all(self.image(s) in B for s in A)

    def restrict(self, A: Complex, B: Complex | None = None) -> "SimplicialMap":
        B = A if B is None else B
        if not self.maps_into(A, B):
            raise SimplicialMapError("map does not carry the subcomplex into the target subcomplex")
        return SimplicialMap(A, B, {v: self.vertex_map[v] for v in A.vertices})

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.vertex_map == other.vertex_map

    def __repr__(self):
        return "SimplicialMap(%s -> %s)" % (self.source.name or "?", self.target.name or "?")


def validate_simplicial_map(vertex_map: Mapping[str, str], X: Complex, Y: Complex) -> SimplicialMap:
    return SimplicialMap(X, Y, vertex_map)


def identity(X: Complex) -> SimplicialMap:
    return SimplicialMap(X, X, {v: v for v in X.vertices})


def constant(X: Complex, v: str, Y: Complex | None = None) -> SimplicialMap:
    Y = X if Y is None else Y
    return SimplicialMap(X, Y, {u: v for u in X.vertices})


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f."""
    if f.target != g.source:
        raise SimplicialMapError("cannot compose: target of f is not the source of g")
    return SimplicialMap(f.source, g.target, {v: g.vertex_map[f.vertex_map[v]] for v in f.source.vertices})


def relabel(X: Complex, mapping: Mapping[str, str]) -> Complex:
    """Same complex with vertex v renamed mapping[v]; boundary signs change with the order."""
    if len(set(mapping[v] for v in X.vertices)) != len(X.vertices):
        raise ComplexError("relabelling is not injective")
    bp = mapping[X.basepoint] if X.basepoint is not None else None
    return Complex._make({tuple(sorted(mapping[v] for v in s)) for s in X}, X.name, bp)


def relabel_map(f: SimplicialMap, src: Mapping[str, str], tgt: Mapping[str, str]) -> SimplicialMap:
    return SimplicialMap(
        relabel(f.source, src), relabel(f.target, tgt), {src[v]: tgt[w] for v, w in f.vertex_map.items()}
    )


def simplicial_maps(X: Complex, Y: Complex) -> Iterator[dict[str, str]]:
    """Every simplicial vertex map X -> Y, by backtracking in vertex order."""
    order = X.vertices
    pos = {v: i for i, v in enumerate(order)}
    # each simplex is checked once, when its last vertex gets assigned
    closing: list[list[Simplex]] = [[] for _ in order]
    for s in X:
        if len(s) > 1:
            closing[max(pos[v] for v in s)].append(s)
    ysimps = Y.simplex_set
    targets = Y.vertices
    assign: dict[str, str] = {}

    def ok(i):
        for s in closing[i]:
            if tuple(sorted({assign[v] for v in s})) not in ysimps:
                return False
        return True

    def rec(i, choices):
        if i == len(order):
            yield dict(assign)
            return
        v = order[i]
        for y in choices(i):
            assign[v] = y
            if ok(i):
                yield from rec(i + 1, choices)
        assign.pop(v, None)

    yield from rec(0, lambda i: targets)


def random_simplicial_map(X: Complex, Y: Complex, rng: random.Random) -> SimplicialMap:
    order = X.vertices
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[Simplex]] = [[] for _ in order]
    for s in X:
        if len(s) > 1:
            closing[max(pos[v] for v in s)].append(s)
    ysimps = Y.simplex_set
    assign: dict[str, str] = {}

    def rec(i):
        if i == len(order):
            return True
        cands = list(Y.vertices)
        rng.shuffle(cands)
        for y in cands:
            assign[order[i]] = y
            if all(tuple(sorted({assign[v] for v in s})) in ysimps for s in closing[i]) and rec(i + 1):
                return True
        del assign[order[i]]
        return False

    rec(0)
    return SimplicialMap(X, Y, assign)


# ---------------------------------------------------------------- suspension

def _fresh_poles(X: Complex) -> tuple[str, str]:
    for k in itertools.count():
        n, s = ("north", "south") if k == 0 else ("north%d" % k, "south%d" % k)
        if n not in X.vertex_set and s not in X.vertex_set:
            return n, s
    raise AssertionError  # pragma: no cover


def suspend(X: Complex, poles: tuple[str, str] | None = None) -> Complex:
    """Join of X with two new vertices."""
    if poles is None:
        poles = _fresh_poles(X)
    n, s = poles
    if n == s or n in X.vertex_set or s in X.vertex_set:
        raise ComplexError("pole labels %r collide with existing vertices" % (poles,))
    simps = set(X.simplex_set) | {(n,), (s,)}
    for sig in X:
        simps.add(tuple(sorted(sig + (n,))))
        simps.add(tuple(sorted(sig + (s,))))
    return Complex._make(simps, "susp(%s)" % (X.name or "?"), basepoint=n)


def suspend_map(f: SimplicialMap, poles: tuple[str, str] | None = None) -> SimplicialMap:
    if not f.is_selfmap():
        raise SimplicialMapError("suspend_map needs a selfmap")
    if poles is None:
        poles = _fresh_poles(f.source)
    S = suspend(f.source, poles)
    vm = dict(f.vertex_map)
    vm[poles[0]] = poles[0]
    vm[poles[1]] = poles[1]
    return SimplicialMap(S, S, vm)


# ---------------------------------------------------------------- wedges

@dataclass(frozen=True, eq=False)
class Summand:
    complex: Complex
    inclusion: SimplicialMap
    projection: SimplicialMap


@dataclass(frozen=True, eq=False)
class WedgeStructure:
    wedge: Complex
    basepoint: str
    summands: tuple[Summand, ...]

    def __len__(self):
        return len(self.summands)


WEDGE_POINT = "*"


def wedge_sum(summands: Sequence[tuple[Complex, str]]) -> tuple[Complex, WedgeStructure]:
    """One-point union of based complexes; summand j's vertex v becomes 'sj:v'."""
    if not summands:
        raise ComplexError("wedge of no summands")
    width = len(str(len(summands)))
    simps: set[Simplex] = set()
    renames = []
    for j, (K, bp) in enumerate(summands, 1):
        if bp is None or bp not in K.vertex_set:
            raise ComplexError("summand %d has no basepoint vertex" % j)
        tag = "s%0*d:" % (width, j)
        ren = {v: (WEDGE_POINT if v == bp else tag + v) for v in K.vertices}
        renames.append(ren)
        simps |= {tuple(sorted(ren[v] for v in s)) for s in K}
    W = Complex._make(simps, "wedge(%s)" % ",".join(K.name or "?" for K, _ in summands), basepoint=WEDGE_POINT)
    parts = []
    for (K, bp), ren in zip(summands, renames):
        back = {w: v for v, w in ren.items()}
        e = SimplicialMap(K, W, ren)
        p = SimplicialMap(W, K, {w: back.get(w, bp) for w in W.vertices})
        parts.append(Summand(K, e, p))
    return W, WedgeStructure(W, WEDGE_POINT, tuple(parts))


# ---------------------------------------------------------------- subdivisions

def _as_coords(raw: Mapping[str, object]) -> dict[str, Fraction]:
    return {b: Fraction(x) for b, x in raw.items() if Fraction(x) != 0}


@dataclass(frozen=True, eq=False)
class CarrierComplex:
    """A geometric subdivision of ``base``.

    ``coords`` gives each refined vertex as barycentric weights on base
    vertices (zero weights omitted). The carrier of a refined simplex is the
    union of its vertices' supports, which must be a base simplex.
    """

    refined: Complex
    base: Complex
    coords: Mapping[str, Mapping[str, Fraction]]
    carriers: Mapping[Simplex, Simplex] | None = None

    def __post_init__(self):
        coords = {}
        for w in self.refined.vertices:
            if w not in self.coords:
                raise SubdivisionError("refined vertex %r has no coordinates" % (w,))
            c = self.coords[w]
            for b, x in c.items():
                if b not in self.base.vertex_set:
                    raise SubdivisionError("coordinate of %r names %r, not a base vertex" % (w, b))
                if Fraction(x) < 0:
                    raise SubdivisionError("negative coordinate at refined vertex %r" % (w,))
            cw = _as_coords(c)
            if sum(cw.values()) != 1:
                raise SubdivisionError("coordinates of %r sum to %s, not 1" % (w, sum(cw.values())))
            coords[w] = cw
        object.__setattr__(self, "coords", coords)

        vertex_at = {}
        for w, c in coords.items():
            if len(c) == 1:
                (b,) = c
                if b in vertex_at:
                    raise SubdivisionError("base vertex %r appears twice among refined vertices" % (b,))
                vertex_at[b] = w
        for b in self.base.vertices:
            if b not in vertex_at:
                raise SubdivisionError("base vertex %r is not a refined vertex" % (b,))
        object.__setattr__(self, "vertex_at", vertex_at)

        carrier = {}
        bverts = self.base.vertices
        for t in self.refined:
            supp = tuple(sorted(set().union(*(coords[w].keys() for w in t))))
            if supp not in self.base:
                raise SubdivisionError("refined simplex %r is not contained in a base simplex" % (t,))
            if len(t) > 1:
                M = Matrix([[coords[w].get(b, 0) for w in t] for b in bverts])
                if rank(M) != len(t):
                    raise SubdivisionError("refined simplex %r is geometrically degenerate" % (t,))
            carrier[t] = supp
        if self.carriers is not None:
            for t, s in self.carriers.items():
                t = tuple(sorted(t))
                if t not in carrier:
                    raise SubdivisionError("carrier given for %r, not a refined simplex" % (t,))
                if tuple(sorted(s)) != carrier[t]:
                    raise SubdivisionError(
                        "carrier of %r given as %r but coordinates put it in %r" % (t, tuple(s), carrier[t])
                    )
        object.__setattr__(self, "carriers", carrier)

    def carrier(self, t: Simplex) -> Simplex:
        return self.carriers[tuple(t)]

    def carried_by(self, sigma: Simplex, p: int) -> list[Simplex]:
        """Refined p-simplices lying in the closed base simplex sigma."""
        ss = set(sigma)
        return [t for t in self.refined.cells(p) if set(self.carriers[t]) <= ss]

    def point(self, cell: Simplex, weights: Sequence) -> dict[str, Fraction]:
        """Base barycentric coordinates of sum weights[i] * cell[i]."""
        out: dict[str, Fraction] = {}
        for w, t in zip(cell, weights):
            t = Fraction(t)
            if t:
                for b, x in self.coords[w].items():
                    out[b] = out.get(b, 0) + t * x
        return {b: x for b, x in out.items() if x}

    @classmethod
    def identity(cls, X: Complex) -> "CarrierComplex":
        return cls(X, X, {v: {v: Fraction(1)} for v in X.vertices})


def barycenter_label(sigma: Simplex) -> str:
    return sigma[0] if len(sigma) == 1 else "<" + "+".join(sigma) + ">"


def barycentric_subdivide(X: Complex) -> CarrierComplex:
    label = {s: barycenter_label(s) for s in X}
    if len(set(label.values())) != len(label):
        raise SubdivisionError("vertex labels of %s collide with barycenter labels" % (X.name or "the complex"))
    flags = set()
    for top in X.maximal_simplices:
        for perm in itertools.permutations(top):
            flags.add(tuple(sorted(label[tuple(sorted(perm[: k + 1]))] for k in range(len(perm)))))
    refined = Complex._make(_closure(flags), "sd(%s)" % (X.name or "?"))
    coords = {label[s]: {v: Fraction(1, len(s)) for v in s} for s in X}
    return CarrierComplex(refined, X, coords)


def subdivision_coords(point: Mapping[str, Fraction], X: Complex) -> dict[str, Fraction]:
    """Re-express a point of |X| in barycentric coordinates of Sd X.

    With weights sorted x_0 >= x_1 >= ... (ties broken by vertex order), the
    point is sum_k (k+1)(x_k - x_{k+1}) times the barycenter of the top k+1 vertices.
    """
    items = sorted(((Fraction(x), v) for v, x in point.items() if x), key=lambda t: (-t[0], t[1]))
    out = {}
    for k, (x, _) in enumerate(items):
        nxt = items[k + 1][0] if k + 1 < len(items) else Fraction(0)
        w = (k + 1) * (x - nxt)
        if w:
            sigma = tuple(sorted(v for _, v in items[: k + 1]))
            if sigma not in X:
                raise SubdivisionError("point support %r is not a simplex" % (sigma,))
            out[barycenter_label(sigma)] = w
    return out


def subdivide_map(f: SimplicialMap) -> SimplicialMap:
    """The map Sd X -> Sd Y sending the barycenter of s to that of f(s)."""
    sx = barycentric_subdivide(f.source).refined
    sy = barycentric_subdivide(f.target).refined
    vm = {barycenter_label(s): barycenter_label(f.image(s)) for s in f.source}
    return SimplicialMap(sx, sy, vm)


# ---------------------------------------------------------------- carried selfmaps

@dataclass(frozen=True, eq=False)
class GeoSelfMap:
    """Piecewise-affine selfmap of |base|: affine on each refined simplex,
    sending refined vertex w to base vertex vertex_map(w)."""

    subdivision: CarrierComplex
    vertex_map: SimplicialMap
    name: str = ""

    def __post_init__(self):
        if self.vertex_map.source != self.subdivision.refined:
            raise SimplicialMapError("vertex map must be defined on the refined complex")
        if self.vertex_map.target != self.subdivision.base:
            raise SimplicialMapError("vertex map must land in the base complex")

    @property
    def base(self) -> Complex:
        return self.subdivision.base

    def image(self, cell: Simplex, weights: Sequence) -> dict[str, Fraction]:
        out: dict[str, Fraction] = {}
        for w, t in zip(cell, weights):
            t = Fraction(t)
            if t:
                v = self.vertex_map(w)
                out[v] = out.get(v, 0) + t
        return out

    def locate(self, point: Mapping[str, Fraction]) -> tuple[Simplex, tuple[Fraction, ...]]:
        """Open refined cell containing the point, with weights on the cell's vertices."""
        point = _as_coords(point)
        supp = tuple(sorted(point))
        S = self.subdivision
        bverts = self.base.vertices
        target = tuple(Fraction(point.get(b, 0)) for b in bverts)
        for t in S.refined:
            if S.carriers[t] != supp:
                continue
            cols = [tuple(S.coords[w].get(b, Fraction(0)) for b in bverts) for w in t]
            c = solve_modulo(target, cols, [])
            if c is not None and all(x > 0 for x in c):
                return t, c
        raise SubdivisionError("point %r is not in |X|" % (point,))

    def evaluate(self, point: Mapping[str, Fraction]) -> dict[str, Fraction]:
        cell, weights = self.locate(point)
        return {b: x for b, x in self.image(cell, weights).items() if x}

    @classmethod
    def from_simplicial(cls, f: SimplicialMap, name: str = "") -> "GeoSelfMap":
        if not f.is_selfmap():
            raise SimplicialMapError("not a selfmap")
        return cls(CarrierComplex.identity(f.source), f, name)

    @classmethod
    def from_walks(cls, X: Complex, walks: Mapping[Simplex, Sequence[str]], name: str = "") -> "GeoSelfMap":
        """Selfmap of a graph: edge (u, v) (u < v) is cut into len(walk) - 1 equal
        pieces, the i-th cut point going to walk[i]. Walks must start at f(u)
        and end at f(v); consecutive entries must be equal or adjacent."""
        if X.dim > 1:
            raise SubdivisionError("from_walks needs a graph")
        fv: dict[str, str] = {}
        coords: dict[str, dict[str, Fraction]] = {v: {v: Fraction(1)} for v in X.vertices}
        vm: dict[str, str] = {}
        edges = []
        for e in X.cells(1):
            if e not in walks:
                raise SubdivisionError("no walk for edge %r" % (e,))
            walk = list(walks[e])
            if len(walk) < 2:
                raise SubdivisionError("walk for edge %r is too short" % (e,))
            u, v = e
            for end, img in ((u, walk[0]), (v, walk[-1])):
                if fv.setdefault(end, img) != img:
                    raise SubdivisionError("walks disagree on the image of vertex %r" % (end,))
            r = len(walk) - 1
            pts = [u]
            for i in range(1, r):
                lab = "%s~%s/%d" % (u, v, i)
                coords[lab] = {u: Fraction(r - i, r), v: Fraction(i, r)}
                vm[lab] = walk[i]
                pts.append(lab)
            pts.append(v)
            edges.extend(zip(pts, pts[1:]))
        for v in X.vertices:
            if v not in fv:
                raise SubdivisionError("isolated vertex %r has no image" % (v,))
            vm[v] = fv[v]
        K = build_complex(edges, name="walks(%s)" % (X.name or "?"))
        S = CarrierComplex(K, X, coords)
        return cls(S, SimplicialMap(K, X, vm), name)
