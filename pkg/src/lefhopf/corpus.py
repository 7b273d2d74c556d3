"""The reproducible corpus of maps, pairs and triads used by the checks.

Circle maps are built from integer lifts: the circle |cycle(m)| is
parametrised by [0, m) with vertex i at i, and a map is given by lift
values a_0, ..., a_m at the vertices (a_m = a_0 + m d). Edge i is cut into
|a_{i+1} - a_i| equal pieces, so the map is affine with that slope on it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .scomplex import (
    Complex,
    GeoSelfMap,
    SimplicialMap,
    WedgeStructure,
    compose,
    constant,
    cycle,
    identity,
    octahedron,
    random_simplicial_map,
    rp2_6,
    simplex,
    sphere,
    suspend,
    suspend_map,
    torus7,
    wedge_spheres,
)

SEED = 20240917


def lift_walk(lift_from: int, lift_to: int, labels: Sequence[str], repeat: int = 1) -> list[str]:
    """Vertex labels passed through when the lift runs monotonically between two integers.

    ``repeat`` holds each vertex for that many pieces, giving a homotopic
    reparametrisation on a finer subdivision.
    """
    m = len(labels)
    step = 1 if lift_to >= lift_from else -1
    pos = list(range(lift_from, lift_to + step, step)) if lift_to != lift_from else [lift_from, lift_from]
    out = []
    for p in pos:
        out.extend([labels[p % m]] * repeat)
    return out[repeat - 1:] if repeat > 1 else out


def walks_for_cycle(X: Complex, order: Sequence[str], lift: Sequence[int], labels: Sequence[str], repeat: int = 1):
    """Walks for the edges of the circle ``order`` (closed, in traversal order)."""
    walks = {}
    m = len(order)
    for i in range(m):
        u, v = order[i], order[(i + 1) % m]
        w = lift_walk(lift[i], lift[i + 1], labels, repeat)
        if (u, v) in X.simplex_set:
            walks[(u, v)] = w
        else:
            walks[(v, u)] = w[::-1]
    return walks


def circle_lift(d: int, m: int = 3) -> tuple[int, ...]:
    """A lift for a degree-d map of cycle(m) with finitely many fixed points,
    none at a vertex or refined vertex.

    Slopes all lie on one side of 1 (so fixed points are transversal with
    index sign(1 - slope)); among valid lifts we take the fewest pieces, then
    the lexicographically smallest.
    """
    best = None
    lo, hi = (1, m * d) if d >= 1 else (min(m * d, 0) - m, 1)
    for slopes in itertools.product(range(lo, hi + 1), repeat=m):
        if sum(slopes) != m * d:
            continue
        for a0 in range(m):
            a = [a0]
            for s in slopes:
                a.append(a[-1] + s)
            # displacement a_i - i is constant mod m along slope-1 edges; it
            # must avoid 0 at every vertex
            if any((a[i] - i) % m == 0 for i in range(m)):
                continue
            key = (sum(max(abs(s), 1) for s in slopes), slopes, a0)
            if best is None or key < best[0]:
                best = (key, tuple(a))
    if best is None:
        raise ValueError("no general-position lift for degree %d on cycle(%d)" % (d, m))
    return best[1]


def circle_map(d: int, repeat: int = 1) -> GeoSelfMap:
    """A general-position model of z -> z^d on cycle(3)."""
    X = cycle(3)
    lift = circle_lift(d)
    walks = walks_for_cycle(X, X.vertices, lift, X.vertices, repeat)
    name = "circle:%d" % d + ("" if repeat == 1 else "x%d" % repeat)
    return GeoSelfMap.from_walks(X, walks, name)


def wrap_map(d: int) -> GeoSelfMap:
    """The uniform degree-d wrap of cycle(3) (every edge cut into |d| pieces).

    Not in general position for every d; used for homology.
    """
    X = cycle(3)
    lift = [d * i for i in range(4)]
    return GeoSelfMap.from_walks(X, walks_for_cycle(X, X.vertices, lift, X.vertices), "wrap:%d" % d)


def wedge_circle_map() -> tuple[GeoSelfMap, WedgeStructure]:
    """A general-position selfmap of the wedge of two circles with component degrees (2, 3).

    The basepoint goes to s1:v1, so it is not fixed. Circle 1 winds twice
    around itself; circle 2 leaves through circle 1, winds three times around
    circle 2 and comes back.
    """
    W = wedge_spheres(1, 2)
    X = W.wedge
    c1 = ["*", "s1:v1", "s1:v2"]
    c2 = ["*", "s2:v1", "s2:v2"]
    walks = walks_for_cycle(X, c1, (1, 3, 4, 7), c1)
    w0 = ["s1:v1", "*", "s2:v1", "s2:v2", "*"]
    w1 = ["*", "s2:v1", "s2:v2", "*"]
    w2 = ["*", "s2:v1", "s2:v2", "*", "s1:v1"]
    for (u, v), w in (((c2[0], c2[1]), w0), ((c2[1], c2[2]), w1), ((c2[2], c2[0]), w2)):
        if (u, v) in X.simplex_set:
            walks[(u, v)] = w
        else:
            walks[(v, u)] = w[::-1]
    return GeoSelfMap.from_walks(X, walks, "wedge(2,3)"), W


# ---------------------------------------------------------------- simplicial maps


def vmap(X: Complex, pairs: dict[str, str], Y: Complex | None = None) -> SimplicialMap:
    """Vertex map that is the identity except on the listed vertices."""
    vm = {v: pairs.get(v, v) for v in X.vertices}
    return SimplicialMap(X, X if Y is None else Y, vm)


def edge_swap() -> SimplicialMap:
    D = simplex(1)
    return vmap(D, {"v0": "v1", "v1": "v0"})


def triangle_rotation() -> SimplicialMap:
    D = simplex(2)
    return vmap(D, {"v0": "v1", "v1": "v2", "v2": "v0"})


def cycle_rotation(m: int = 3) -> SimplicialMap:
    C = cycle(m)
    vs = C.vertices
    return vmap(C, {vs[i]: vs[(i + 1) % m] for i in range(m)})


def cycle_reflection() -> SimplicialMap:
    C = cycle(3)
    return vmap(C, {"c0": "c1", "c1": "c0"})


def antipodal() -> SimplicialMap:
    O = octahedron()
    flip = {"+": "-", "-": "+"}
    return vmap(O, {v: v[0] + flip[v[1]] for v in O.vertices})


def octahedron_rotation() -> SimplicialMap:
    """Quarter turn about the z axis."""
    O = octahedron()
    return vmap(O, {"x+": "y+", "y+": "x-", "x-": "y-", "y-": "x+"})


def torus_shift(k: int = 1) -> SimplicialMap:
    T = torus7()
    return vmap(T, {v: str((int(v) + k) % 7) for v in T.vertices})


def sphere_reflection(n: int) -> SimplicialMap:
    """Swap the last two vertices of the boundary of the (n+1)-simplex (fixes v0)."""
    S = sphere(n)
    a, b = S.vertices[-2], S.vertices[-1]
    return vmap(S, {a: b, b: a})


def sphere_cycle_perm(n: int) -> SimplicialMap:
    """Cyclic shift of the vertices after v0; degree is the sign of the shift."""
    S = sphere(n)
    rest = S.vertices[1:]
    return vmap(S, {rest[i]: rest[(i + 1) % len(rest)] for i in range(len(rest))})


# ---------------------------------------------------------------- pairs and triads


@dataclass(frozen=True)
class PairCase:
    name: str
    f: SimplicialMap
    sub: Complex


def _circle_of_wedge(W: WedgeStructure, j: int) -> Complex:
    e = W.summands[j].inclusion
    return W.wedge.subcomplex(e.image(s) for s in W.summands[j].complex)


def pair_corpus() -> list[PairCase]:
    D2 = simplex(2)
    bD2 = D2.subcomplex(s for s in D2 if len(s) <= 2)
    D1 = simplex(1)
    W2 = wedge_spheres(1, 2)
    O = octahedron()
    equator = O.subcomplex([("x+", "y+"), ("x+", "y-"), ("x-", "y+"), ("x-", "y-")])
    T = torus7()
    tri = T.maximal_simplices[0]
    P = rp2_6()
    rtri = P.maximal_simplices[0]
    C3 = cycle(3)
    S1 = sphere(1)
    SS1 = suspend(S1)
    S2 = sphere(2)
    cases = [
        PairCase("id(D2, dD2)", identity(D2), bD2),
        PairCase("rotation(D2, dD2)", triangle_rotation(), bD2),
        PairCase("id(W2, S1)", identity(W2.wedge), _circle_of_wedge(W2, 0)),
        PairCase("swap(D1, dD1)", edge_swap(), D1.subcomplex([("v0",), ("v1",)])),
        PairCase("antipodal(O, equator)", antipodal(), equator),
        PairCase("rotation(O, equator)", octahedron_rotation(), equator),
        PairCase("id(T, triangle)", identity(T), T.subcomplex([tri])),
        PairCase("id(RP2, edge loop)", identity(P), P.subcomplex(itertools.combinations(rtri, 2))),
        PairCase("reflection(C3, c2)", cycle_reflection(), C3.subcomplex([("c2",)])),
        PairCase("susp(reflection)(SS1, S1)", suspend_map(sphere_reflection(1)), SS1.subcomplex(S1)),
        PairCase("const(S2, v0)", constant(S2, "v0"), S2.subcomplex([("v0",)])),
        PairCase("id(X, X)", identity(C3), C3),
    ]
    return cases


@dataclass(frozen=True)
class TriadCase:
    name: str
    f: SimplicialMap
    P: Complex
    Q: Complex


def triad_corpus() -> list[TriadCase]:
    S1 = sphere(1)
    arcs_P = S1.subcomplex([("v0", "v1"), ("v1", "v2")])
    arcs_Q = S1.subcomplex([("v0", "v2")])
    refl = vmap(S1, {"v0": "v2", "v2": "v0"})
    W2 = wedge_spheres(1, 2)
    X = W2.wedge
    wrefl = vmap(X, {"s1:v1": "s1:v2", "s1:v2": "s1:v1"})
    O = octahedron()
    north = O.subcomplex(s for s in O.maximal_simplices if "z+" in s)
    south = O.subcomplex(s for s in O.maximal_simplices if "z-" in s)
    g = suspend_map(cycle_reflection())
    SX = g.source
    cone_n = SX.subcomplex(s for s in SX if "south" not in s)
    cone_s = SX.subcomplex(s for s in SX if "north" not in s)
    return [
        TriadCase("reflection(S1 = arc u arc)", refl, arcs_P, arcs_Q),
        TriadCase("id(S1 = arc u arc)", identity(S1), arcs_P, arcs_Q),
        TriadCase("reflection(W2 = S1 v S1)", wrefl, _circle_of_wedge(W2, 0), _circle_of_wedge(W2, 1)),
        TriadCase("rotation(O = hemispheres)", octahedron_rotation(), north, south),
        TriadCase("susp(reflection)(cones)", g, cone_n, cone_s),
    ]


# ---------------------------------------------------------------- composable pairs


def commutative_corpus(seed: int = SEED) -> list[tuple[str, SimplicialMap, SimplicialMap]]:
    """Pairs f: X -> Y, g: Y -> X. Structured cases first, then seeded random ones."""
    rng = random.Random(seed)
    out = [
        ("rotation/reflection on C3", cycle_rotation(), cycle_reflection()),
        ("antipodal/rotation on O", antipodal(), octahedron_rotation()),
        ("shift/shift on T", torus_shift(1), torus_shift(3)),
    ]
    spaces = [
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("S2", sphere(2)),
        ("O", octahedron()),
        ("W2", wedge_spheres(1, 2).wedge),
        ("T", torus7()),
        ("RP2", rp2_6()),
        ("D2", simplex(2)),
    ]
    pairs = [(a, b) for a, b in itertools.combinations(spaces, 2)]
    for (nx, X), (ny, Y) in pairs:
        f = random_simplicial_map(X, Y, rng)
        g = random_simplicial_map(Y, X, rng)
        out.append(("random %s<->%s" % (nx, ny), f, g))
    return out


# ---------------------------------------------------------------- based maps and wedges


def based_corpus() -> list[tuple[str, SimplicialMap]]:
    """Selfmaps fixing the basepoint, for the suspension check."""
    S0 = sphere(0)
    out = [
        ("id S0", identity(S0)),
        ("const S0", constant(S0, "v0")),
        ("id S1", identity(sphere(1))),
        ("reflection S1", sphere_reflection(1)),
        ("const S1", constant(sphere(1), "v0")),
        ("reflection S2", sphere_reflection(2)),
        ("shift S2", sphere_cycle_perm(2)),
        ("id S2", identity(sphere(2))),
        ("reflection C3", vmap(cycle(3), {"c1": "c2", "c2": "c1"})),
        ("id W2", identity(wedge_spheres(1, 2).wedge)),
        ("id T", identity(torus7())),
        ("const RP2", constant(rp2_6(), rp2_6().vertices[0])),
    ]
    # iterated suspensions, reaching the 3-sphere
    out.append(("susp reflection S2", suspend_map(sphere_reflection(2))))
    out.append(("susp susp reflection S1", suspend_map(suspend_map(sphere_reflection(1)))))
    return out


def wedge_sphere_corpus(n: int, k: int = 2) -> tuple[WedgeStructure, list[tuple[str, SimplicialMap]]]:
    """Selfmaps of the wedge of k n-spheres: each summand goes to a chosen
    summand by a basepoint-fixing permutation (degree = its sign) or collapses."""
    W = wedge_spheres(n, k)
    base = sphere(n)
    rest = base.vertices[1:]
    perms = [dict(zip(rest, p)) for p in itertools.permutations(rest)]
    choices = [None] + [(j, p) for j in range(k) for p in perms[:3]]
    out = []
    for combo in itertools.product(choices, repeat=k):
        vm = {W.basepoint: W.basepoint}
        for i, ch in enumerate(combo):
            e_i = W.summands[i].inclusion
            for v in rest:
                if ch is None:
                    vm[e_i(v)] = W.basepoint
                else:
                    j, p = ch
                    vm[e_i(v)] = W.summands[j].inclusion(p[v])
        out.append(("wedge S%d %r" % (n, combo), SimplicialMap(W.wedge, W.wedge, vm)))
    return W, out


# ---------------------------------------------------------------- fixed-point corpus

CIRCLE_DEGREES = (-2, -1, 0, 2, 3)


def normalization_corpus() -> list[GeoSelfMap]:
    out = [
        GeoSelfMap.from_simplicial(edge_swap(), "edge swap"),
        GeoSelfMap.from_simplicial(triangle_rotation(), "triangle rotation"),
        GeoSelfMap.from_simplicial(antipodal(), "antipodal"),
    ]
    out += [circle_map(d) for d in CIRCLE_DEGREES]
    out.append(circle_map(1))
    out.append(wedge_circle_map()[0])
    return out


def homotopy_corpus() -> list[tuple[str, object, object]]:
    """Pairs of maps known to be homotopic (the homotopy is not computed)."""
    out = [("circle:%d at two subdivision levels" % d, circle_map(d), circle_map(d, repeat=2)) for d in CIRCLE_DEGREES]
    out += [
        ("torus shift ~ id", torus_shift(1), identity(torus7())),
        ("triangle rotation ~ id (contractible)", triangle_rotation(), identity(simplex(2))),
        ("constants on S2", constant(sphere(2), "v0"), constant(sphere(2), "v3")),
        ("C3 rotation ~ id", cycle_rotation(), identity(cycle(3))),
        ("circle:2 ~ uniform wrap", circle_map(2), wrap_map(2)),
    ]
    return out


def lefschetz_identity_corpus() -> list[Complex]:
    return [sphere(1), sphere(2), torus7(), rp2_6(), wedge_spheres(1, 3).wedge, simplex(3)]


def compose_all(maps: Sequence[SimplicialMap]) -> SimplicialMap:
    out = maps[0]
    for g in maps[1:]:
        out = compose(g, out)
    return out
