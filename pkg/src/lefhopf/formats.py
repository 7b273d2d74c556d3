"""JSON files for complexes, maps and verification manifests.

Complex file::

    {"name": "c3", "vertices": ["a", "b", "c"],
     "simplices": [["a", "b"], ["b", "c"], ["a", "c"]], "basepoint": "a"}

Only maximal simplices need be listed; the closure is recomputed on load.

Map file::

    {"name": "deg2", "source": "cycle:3", "target": "cycle:3",
     "vertex_map": {"c0": "c0", ...},
     "subdivision": {"refined": {<complex file body>},
                     "coords": {"w": {"c0": "1/2", "c1": "1/2"}, ...},
                     "carriers": [[["w", "c0"], ["c0", "c1"]], ...]}}

With a subdivision block the vertex map is defined on the refined complex
and the file describes a GeoSelfMap of the source. Rationals are integers
or strings "p/q"; decimals are rejected.

Complex references are built-in names (``sphere:2``, ``cycle:5``,
``torus7``, ``rp2_6``, ``wedge_circles:2``, ``wedge_spheres:2:3``,
``simplex:3``, ``octahedron``), paths to complex files, inline complex
objects, or names already in the registry.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from typing import Any, Mapping

from . import corpus
from .scomplex import (
    CarrierComplex,
    Complex,
    ComplexError,
    GeoSelfMap,
    SimplicialMap,
    SimplicialMapError,
    WedgeStructure,
    build_complex,
    constant,
    generate,
    identity,
    wedge_spheres,
)


class FormatError(ValueError):
    """Malformed or invalid input file; the message names the file and field."""


_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(x: Any, where: str = "") -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise FormatError("%s: %r is not an exact rational (use an integer or \"p/q\")" % (where, x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        try:
            return Fraction(x.replace(" ", ""))
        except ZeroDivisionError:
            raise FormatError("%s: %r has a zero denominator" % (where, x)) from None
    raise FormatError("%s: %r is not an exact rational (use an integer or \"p/q\")" % (where, x))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise FormatError("%s: line %d column %d: %s" % (path, e.lineno, e.colno, e.msg)) from None
    except OSError as e:
        raise FormatError("%s: %s" % (path, e.strerror or e)) from None


def write_json(path: str, data: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------- complexes


def builtin_complex(ref: str) -> Complex | None:
    """The built-in complex named by ``ref``, or None if ref is not a built-in name."""
    kind, *params = ref.split(":")
    known = {"simplex", "sphere", "cycle", "wedge_spheres", "wedge_circles", "octahedron", "torus7", "rp2_6"}
    if kind not in known:
        return None
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise FormatError("%s: parameters must be integers" % ref) from None
    try:
        return generate(kind, *ints)
    except ComplexError as e:
        raise FormatError("%s: %s" % (ref, e)) from None


def builtin_wedge(ref: str) -> WedgeStructure | None:
    kind, *params = ref.split(":")
    try:
        if kind == "wedge_circles" and len(params) == 1:
            return wedge_spheres(1, int(params[0]))
        if kind == "wedge_spheres" and len(params) == 2:
            return wedge_spheres(int(params[0]), int(params[1]))
    except (ValueError, ComplexError) as e:
        raise FormatError("%s: %s" % (ref, e)) from None
    return None


def complex_to_json(X: Complex) -> dict:
    out = {
        "name": X.name,
        "vertices": list(X.vertices),
        "simplices": [list(s) for s in X.maximal_simplices],
    }
    if X.basepoint is not None:
        out["basepoint"] = X.basepoint
    return out


def complex_from_json(data: Any, where: str = "complex") -> Complex:
    if not isinstance(data, Mapping):
        raise FormatError("%s: expected an object" % where)
    for key in ("vertices", "simplices"):
        if key not in data:
            raise FormatError("%s: missing field %r" % (where, key))
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise FormatError("%s.vertices: expected a list of strings" % where)
    if len(set(verts)) != len(verts):
        raise FormatError("%s.vertices: labels are not unique" % where)
    simps = data["simplices"]
    if not isinstance(simps, list):
        raise FormatError("%s.simplices: expected a list" % where)
    vset = set(verts)
    for i, s in enumerate(simps):
        if not isinstance(s, list) or not all(isinstance(v, str) for v in s):
            raise FormatError("%s.simplices[%d]: expected a list of vertex labels" % (where, i))
        bad = [v for v in s if v not in vset]
        if bad:
            raise FormatError("%s.simplices[%d]: unknown vertex %r" % (where, i, bad[0]))
    # isolated vertices are listed only under "vertices"
    covered = {v for s in simps for v in s}
    simps = list(simps) + [[v] for v in verts if v not in covered]
    bp = data.get("basepoint")
    if bp is not None and bp not in vset:
        raise FormatError("%s.basepoint: %r is not a vertex" % (where, bp))
    try:
        return build_complex(simps, name=str(data.get("name", "")), basepoint=bp)
    except ComplexError as e:
        raise FormatError("%s: %s" % (where, e)) from None


def load_complex(ref, registry: Mapping[str, Complex] | None = None, base_dir: str = "") -> Complex:
    """A complex by registry name, built-in name, file path, or inline object."""
    if isinstance(ref, Mapping):
        return complex_from_json(ref, where="inline complex")
    if not isinstance(ref, str):
        raise FormatError("complex reference %r is neither a name nor an object" % (ref,))
    if registry and ref in registry:
        return registry[ref]
    X = builtin_complex(ref)
    if X is not None:
        return X
    path = os.path.join(base_dir, ref) if base_dir and not os.path.isabs(ref) else ref
    if not os.path.exists(path):
        raise FormatError("%s: no such complex file or built-in name" % ref)
    return complex_from_json(read_json(path), where=path)


def save_complex(path: str, X: Complex) -> None:
    write_json(path, complex_to_json(X))


# ---------------------------------------------------------------- maps


def builtin_map(ref: str, X: Complex):
    """Built-in maps on X: id, const[:v], antipodal (octahedron), circle:d and
    wrap:d (cycle:3), wedge23 (wedge_circles:2)."""
    kind, *params = ref.split(":")
    if kind == "id":
        return identity(X)
    if kind == "const":
        v = params[0] if params else (X.basepoint if X.basepoint is not None else X.vertices[0])
        if v not in X.vertex_set:
            raise FormatError("const:%s: not a vertex" % v)
        return constant(X, v)
    if kind == "antipodal":
        f = corpus.antipodal()
        if f.source != X:
            raise FormatError("antipodal is defined on the octahedron only")
        return f
    if kind in ("circle", "wrap"):
        try:
            d = int(params[0])
        except (IndexError, ValueError):
            raise FormatError("%s needs an integer degree, as %s:2" % (kind, kind)) from None
        g = corpus.circle_map(d) if kind == "circle" else corpus.wrap_map(d)
        if g.base != X:
            raise FormatError("%s maps are defined on cycle:3 only" % kind)
        return g
    if kind == "wedge23":
        g, _ = corpus.wedge_circle_map()
        if g.base != X:
            raise FormatError("wedge23 is defined on wedge_circles:2 only")
        return g
    return None


def complex_ref(X: Complex):
    """The built-in name of X when it has one, otherwise X inline."""
    try:
        if X.name and builtin_complex(X.name) == X:
            return X.name
    except FormatError:
        pass
    return complex_to_json(X)


def map_to_json(f, name: str | None = None) -> dict:
    if isinstance(f, GeoSelfMap):
        S = f.subdivision
        return {
            "name": name if name is not None else f.name,
            "source": complex_ref(S.base),
            "target": complex_ref(S.base),
            "vertex_map": dict(f.vertex_map.vertex_map),
            "subdivision": {
                "refined": complex_to_json(S.refined),
                "coords": {w: {b: format_rational(x) for b, x in c.items()} for w, c in S.coords.items()},
            },
        }
    return {
        "name": name or "",
        "source": complex_ref(f.source),
        "target": complex_ref(f.target),
        "vertex_map": dict(f.vertex_map),
    }


def map_from_json(data: Any, registry: Mapping[str, Complex] | None = None, where: str = "map", base_dir: str = ""):
    if not isinstance(data, Mapping):
        raise FormatError("%s: expected an object" % where)
    for key in ("source", "vertex_map"):
        if key not in data:
            raise FormatError("%s: missing field %r" % (where, key))
    X = load_complex(data["source"], registry, base_dir)
    Y = load_complex(data.get("target", data["source"]), registry, base_dir)
    vm = data["vertex_map"]
    if not isinstance(vm, Mapping):
        raise FormatError("%s.vertex_map: expected an object" % where)
    sub = data.get("subdivision")
    name = str(data.get("name", ""))
    if sub is None:
        try:
            return SimplicialMap(X, Y, dict(vm))
        except (SimplicialMapError, ComplexError) as e:
            raise FormatError("%s.vertex_map: %s" % (where, e)) from None
    if X != Y:
        raise FormatError("%s: a subdivided map must be a selfmap" % where)
    if not isinstance(sub, Mapping) or "refined" not in sub or "coords" not in sub:
        raise FormatError("%s.subdivision: needs 'refined' and 'coords'" % where)
    K = complex_from_json(sub["refined"], where + ".subdivision.refined")
    raw = sub["coords"]
    if not isinstance(raw, Mapping):
        raise FormatError("%s.subdivision.coords: expected an object" % where)
    coords = {}
    for w, c in raw.items():
        if not isinstance(c, Mapping):
            raise FormatError("%s.subdivision.coords.%s: expected an object" % (where, w))
        coords[w] = {b: parse_rational(x, "%s.subdivision.coords.%s.%s" % (where, w, b)) for b, x in c.items()}
    carriers = None
    if "carriers" in sub:
        carriers = {}
        for i, item in enumerate(sub["carriers"]):
            try:
                t, s = item
                carriers[tuple(sorted(t))] = tuple(s)
            except (TypeError, ValueError):
                raise FormatError("%s.subdivision.carriers[%d]: expected [simplex, carrier]" % (where, i)) from None
    try:
        S = CarrierComplex(K, X, coords, carriers)
        f = SimplicialMap(K, X, dict(vm))
        return GeoSelfMap(S, f, name)
    except ValueError as e:
        raise FormatError("%s: %s" % (where, e)) from None


def load_map(ref: str, X: Complex | None = None, registry: Mapping[str, Complex] | None = None, base_dir: str = ""):
    """A map by file path, or a built-in name on X, or ``name@complex``."""
    if "@" in ref and not os.path.exists(os.path.join(base_dir, ref)):
        mref, cref = ref.split("@", 1)
        X = load_complex(cref, registry, base_dir)
        ref = mref
    if X is not None:
        f = builtin_map(ref, X)
        if f is not None:
            return f
    path = os.path.join(base_dir, ref) if base_dir and not os.path.isabs(ref) else ref
    if not os.path.exists(path):
        raise FormatError("%s: no such map file or built-in map" % ref)
    reg = dict(registry or {})
    if X is not None:
        if X.name:
            reg.setdefault(X.name, X)
    f = map_from_json(read_json(path), reg, where=path, base_dir=os.path.dirname(path))
    if X is not None:
        src = f.base if isinstance(f, GeoSelfMap) else f.source
        if src != X:
            raise FormatError("%s: map is defined on %r, not on the given complex" % (path, src.name))
    return f


def save_map(path: str, f, name: str | None = None) -> None:
    write_json(path, map_to_json(f, name))
