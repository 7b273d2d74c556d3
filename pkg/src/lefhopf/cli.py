"""Command line interface.

Exit codes: 0 success (and every identity as expected), 1 an identity
failed, 2 invalid input, 3 hypothesis violation (non-isolated, degenerate
or badly placed fixed points).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Mapping, Sequence

from . import corpus
from .fixindex import HypothesisViolation, total_index
from .formats import (
    FormatError,
    builtin_wedge,
    format_rational,
    load_complex,
    load_map,
    map_to_json,
    read_json,
    save_complex,
    write_json,
)
from .homology import boundary_matrices, homology
from .lefschetz import (
    AxiomReport,
    degree,
    euler,
    lefschetz,
    relative_euler,
    relative_lefschetz,
    verify_identity,
)
from .scomplex import Complex, GeoSelfMap, generate

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_HYPOTHESIS = 0, 1, 2, 3


def _q(x) -> str | None:
    return None if x is None else format_rational(x)


def _record(**inputs) -> dict:
    return {
        "inputs": inputs,
        "per_degree_traces": None,
        "L": None,
        "L_reduced": None,
        "degrees": None,
        "fixed_points": None,
        "total_index": None,
        "identities": [],
    }


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Mapping):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _identity_json(name: str, rep: AxiomReport, expected: str | None = None) -> dict:
    out = {
        "kind": rep.kind,
        "name": name,
        "lhs": _q(rep.lhs),
        "rhs": _q(rep.rhs),
        "holds": rep.holds,
        "status": rep.status,
        "witnesses": _jsonable(rep.witnesses),
    }
    if rep.note:
        out["note"] = rep.note
    if expected is not None:
        out["expected"] = expected
        out["ok"] = rep.status == expected
    return out


def _sub(X: Complex, ref, base_dir: str = "") -> Complex:
    """A subcomplex of X given as a complex reference or a list of simplices
    (inline JSON is accepted on the command line)."""
    if isinstance(ref, str) and ref.lstrip()[:1] in ("[", "{"):
        try:
            ref = json.loads(ref)
        except json.JSONDecodeError as e:
            raise FormatError("subcomplex: bad inline JSON (%s)" % e) from None
    if isinstance(ref, list):
        try:
            return X.subcomplex(ref)
        except ValueError as e:
            raise FormatError("subcomplex: %s" % e) from None
    A = load_complex(ref, None, base_dir)
    if not A.is_subcomplex_of(X):
        raise FormatError("%s is not a subcomplex of %s" % (A.name or "subcomplex", X.name or "the complex"))
    return A


# ---------------------------------------------------------------- commands


def cmd_generate(args) -> tuple[int, dict, list[str]]:
    if args.kind == "corpus":
        n = write_corpus(args.output)
        return EXIT_OK, _record(kind="corpus", output=args.output), ["wrote %d cases to %s" % (n, args.output)]
    try:
        X = generate(args.kind, *args.params)
    except ValueError as e:
        raise FormatError(str(e)) from None
    save_complex(args.output, X)
    rec = _record(kind=args.kind, params=list(args.params), output=args.output)
    rec["f_vector"] = list(X.f_vector)
    return EXIT_OK, rec, ["wrote %s (f-vector %s) to %s" % (X.name, list(X.f_vector), args.output)]


def cmd_homology(args):
    X = load_complex(args.complex)
    A = _sub(X, args.rel) if args.rel else None
    if A is not None and args.reduced:
        raise FormatError("--reduced and --rel cannot be combined")
    b = homology(boundary_matrices(X, A), args.reduced).betti()
    rec = _record(complex=args.complex, rel=args.rel, reduced=args.reduced)
    rec["betti"] = list(b)
    label = "reduced betti" if args.reduced else "betti"
    return EXIT_OK, rec, ["%s = %s" % (label, " ".join(str(x) for x in b))]


def cmd_euler(args):
    X = load_complex(args.complex)
    rec = _record(complex=args.complex, rel=args.rel)
    if args.rel:
        A = _sub(X, args.rel)
        chi = relative_euler(X, A)
        rec["chi_relative"] = chi
        return EXIT_OK, rec, ["chi(X, A) = %d" % chi]
    r = euler(X)
    rec.update(chi=r.chi, chi_reduced=r.chi_reduced, betti=list(r.betti))
    return EXIT_OK, rec, ["chi = %d" % r.chi, "chi_reduced = %d" % r.chi_reduced]


def cmd_lefschetz(args):
    X = load_complex(args.complex)
    f = load_map(args.map, X)
    r = lefschetz(f)
    rec = _record(complex=args.complex, map=args.map, rel=args.rel)
    rec.update(per_degree_traces=[_q(t) for t in r.traces], L=_q(r.L), L_reduced=_q(r.L_reduced))
    lines = [
        "traces = %s" % " ".join(_q(t) for t in r.traces),
        "L = %s" % _q(r.L),
        "L_reduced = %s" % _q(r.L_reduced),
    ]
    if args.rel:
        if isinstance(f, GeoSelfMap):
            raise FormatError("--rel needs a simplicial selfmap")
        rel = relative_lefschetz(f, _sub(X, args.rel))
        rec["L_relative"] = _q(rel)
        lines.append("L(f; X, A) = %s" % _q(rel))
    return EXIT_OK, rec, lines


def cmd_degree(args):
    X = load_complex(args.complex)
    f = load_map(args.map, X)
    r = degree(f)
    rec = _record(complex=args.complex, map=args.map)
    rec["degrees"] = [r.degree]
    rec["dimension"] = r.dimension
    return EXIT_OK, rec, ["deg = %d (dimension %d)" % (r.degree, r.dimension)]


def _fixed_json(p, idx) -> dict:
    return {
        "cell": list(p.cell),
        "carrier": list(p.carrier),
        "point": {v: _q(x) for v, x in p.point().items()},
        "index": idx,
    }


def cmd_index(args):
    X = load_complex(args.complex)
    f = load_map(args.map, X)
    g = f if isinstance(f, GeoSelfMap) else GeoSelfMap.from_simplicial(f)
    rec = _record(complex=args.complex, map=args.map)
    try:
        rep = total_index(g)
    except HypothesisViolation as e:
        rec["error"] = {"kind": type(e).__name__, "message": str(e)}
        return EXIT_HYPOTHESIS, rec, ["hypothesis violation (%s): %s" % (type(e).__name__, e)]
    L = rep.lefschetz_crosscheck
    rec.update(
        fixed_points=[_fixed_json(p, i) for p, i in rep.fixed_points],
        total_index=rep.total,
        L=_q(L),
        L_reduced=_q(L - 1),
    )
    lines = ["fixed points: %d" % len(rep.fixed_points)]
    for p, i in rep.fixed_points:
        where = ", ".join("%s=%s" % (v, x) for v, x in p.point().items())
        lines.append("  index %+d at %s" % (i, where))
    lines += ["total index = %d" % rep.total, "L = %s" % _q(L)]
    return EXIT_OK, rec, lines


# ---------------------------------------------------------------- manifests

_EXPECT = {True: "holds", False: "fails", "holds": "holds", "fails": "fails", "skip": "skip"}


def _case_inputs(kind: str, inputs: Mapping[str, Any], base_dir: str) -> dict:
    def m(key):
        if key not in inputs:
            raise FormatError("%s case: missing input %r" % (kind, key))
        return load_map(inputs[key], base_dir=base_dir)

    def src(f):
        return f.base if isinstance(f, GeoSelfMap) else f.source

    if kind in ("cofibration", "les_additivity"):
        f = m("map")
        return {"f": f, "A": _sub(src(f), inputs.get("sub"), base_dir)}
    if kind in ("commutativity", "homotopy_instance"):
        out = {"f": m("f"), "g": m("g")}
        if kind == "homotopy_instance" and "note" in inputs:
            out["note"] = str(inputs["note"])
        return out
    if kind == "triad":
        f = m("map")
        return {"f": f, "P": _sub(src(f), inputs.get("P"), base_dir), "Q": _sub(src(f), inputs.get("Q"), base_dir)}
    if kind == "suspension":
        return {"f": m("map")}
    if kind == "wedge_n_spheres":
        f = m("map")
        ref = inputs.get("wedge", src(f).name)
        W = builtin_wedge(ref) if isinstance(ref, str) else None
        if W is None:
            raise FormatError("wedge_n_spheres case: %r is not a built-in wedge" % (ref,))
        return {"f": f, "W": W}
    if kind == "normalization":
        f = m("map")
        return {"g": f if isinstance(f, GeoSelfMap) else GeoSelfMap.from_simplicial(f)}
    raise FormatError("unknown identity kind %r" % (kind,))


def run_manifest(path: str) -> tuple[int, list[dict]]:
    data = read_json(path)
    cases = data.get("cases") if isinstance(data, Mapping) else data
    if not isinstance(cases, list):
        raise FormatError("%s: expected a list of cases" % path)
    base_dir = os.path.dirname(path)
    prepared = []
    for i, case in enumerate(cases):
        where = "%s: cases[%d]" % (path, i)
        if not isinstance(case, Mapping) or "kind" not in case:
            raise FormatError("%s: each case needs a 'kind'" % where)
        exp = case.get("expected", True)
        if exp not in _EXPECT:
            raise FormatError("%s.expected: %r is not true, false or \"skip\"" % (where, exp))
        try:
            inputs = _case_inputs(case["kind"], case.get("inputs", {}), base_dir)
        except FormatError as e:
            raise FormatError("%s: %s" % (where, e)) from None
        prepared.append((case.get("name", "case %d" % i), case["kind"], inputs, _EXPECT[exp]))
    results = [_identity_json(name, verify_identity(kind, **inputs), exp) for name, kind, inputs, exp in prepared]
    bad = [r for r in results if not r["ok"]]
    if not bad:
        return EXIT_OK, results
    if all(r["status"] == "skip" for r in bad):
        return EXIT_HYPOTHESIS, results
    return EXIT_FAILED, results


def cmd_verify(args):
    code, results = run_manifest(args.manifest)
    rec = _record(manifest=args.manifest)
    rec["identities"] = results
    lines = []
    for r in results:
        mark = "ok " if r["ok"] else "BAD"
        lines.append("%s %-16s %-7s %s  (%s vs %s)" % (mark, r["kind"], r["status"], r["name"], r["lhs"], r["rhs"]))
    n_ok = sum(r["ok"] for r in results)
    lines.append("%d/%d cases as expected" % (n_ok, len(results)))
    return code, rec, lines


# ---------------------------------------------------------------- corpus export


def _sub_json(A: Complex) -> list:
    return [list(s) for s in A.maximal_simplices]


def write_corpus(out_dir: str) -> int:
    """Write the corpus as map files plus a manifest that `verify` can run."""
    os.makedirs(os.path.join(out_dir, "maps"), exist_ok=True)
    counter = iter(range(1, 1 << 30))
    cases = []

    def put(f, name) -> str:
        rel = os.path.join("maps", "%03d.json" % next(counter))
        write_json(os.path.join(out_dir, rel), map_to_json(f, name))
        return rel

    for c in corpus.pair_corpus():
        if len(c.sub) == 0:
            continue
        ref = put(c.f, c.name)
        for kind in ("cofibration", "les_additivity"):
            cases.append({"kind": kind, "name": c.name, "inputs": {"map": ref, "sub": _sub_json(c.sub)}})
    for c in corpus.triad_corpus():
        cases.append(
            {"kind": "triad", "name": c.name, "inputs": {"map": put(c.f, c.name), "P": _sub_json(c.P), "Q": _sub_json(c.Q)}}
        )
    for name, f, g in corpus.commutative_corpus():
        cases.append({"kind": "commutativity", "name": name, "inputs": {"f": put(f, name), "g": put(g, name)}})
    for name, f in corpus.based_corpus():
        cases.append({"kind": "suspension", "name": name, "inputs": {"map": put(f, name)}})
    for n in (1, 2, 3):
        W, maps = corpus.wedge_sphere_corpus(n)
        wref = "wedge_spheres:%d:%d" % (n, len(W))
        for name, f in maps[:: max(1, len(maps) // 8)]:
            cases.append({"kind": "wedge_n_spheres", "name": name, "inputs": {"map": put(f, name), "wedge": wref}})
    for g in corpus.normalization_corpus():
        cases.append({"kind": "normalization", "name": g.name, "inputs": {"map": put(g, g.name)}})
    for name, f, g in corpus.homotopy_corpus():
        cases.append({"kind": "homotopy_instance", "name": name, "inputs": {"f": put(f, name), "g": put(g, name)}})
    write_json(os.path.join(out_dir, "manifest.json"), {"name": "corpus", "cases": cases})
    return len(cases)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p = argparse.ArgumentParser(prog="lefhopf", description="Lefschetz numbers and fixed point indices, exactly.")
    p.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write a standard complex (or the corpus) to a file")
    g.add_argument("kind", help="simplex, sphere, cycle, wedge_spheres, wedge_circles, octahedron, torus7, rp2_6, corpus")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_generate)

    h = sub.add_parser("homology", parents=[common], help="Betti numbers")
    h.add_argument("complex")
    h.add_argument("--rel", help="subcomplex for relative homology")
    h.add_argument("--reduced", action="store_true")
    h.set_defaults(func=cmd_homology)

    e = sub.add_parser("euler", parents=[common], help="Euler characteristic")
    e.add_argument("complex")
    e.add_argument("--rel", help="subcomplex A; prints chi(X, A)")
    e.set_defaults(func=cmd_euler)

    for name, func, helptext in (
        ("lefschetz", cmd_lefschetz, "Lefschetz number of a selfmap"),
        ("degree", cmd_degree, "degree of a selfmap of a sphere"),
        ("index", cmd_index, "fixed points and their indices"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("complex")
        s.add_argument("--map", required=True, help="map file or built-in: id, const[:v], antipodal, circle:d, wrap:d, wedge23")
        if name == "lefschetz":
            s.add_argument("--rel", help="subcomplex A; also prints L(f; X, A)")
        s.set_defaults(func=func)

    v = sub.add_parser("verify", parents=[common], help="run a suite manifest")
    v.add_argument("manifest")
    v.set_defaults(func=cmd_verify)
    return p


def _emit(rec: dict, lines: list[str], as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(rec, sort_keys=True, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        code, rec, lines = args.func(args)
    except HypothesisViolation as e:
        rec = _record()
        rec["error"] = {"kind": type(e).__name__, "message": str(e)}
        _emit(rec, ["hypothesis violation (%s): %s" % (type(e).__name__, e)], args.json, out)
        return EXIT_HYPOTHESIS
    except ValueError as e:
        if args.json:
            rec = _record()
            rec["error"] = {"kind": type(e).__name__, "message": str(e)}
            _emit(rec, [], True, out)
        err.write("error: %s\n" % e)
        return EXIT_INVALID
    _emit(rec, lines, args.json, out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
