import json
from fractions import Fraction as F

import pytest

from lefhopf import corpus
from lefhopf.formats import (
    FormatError,
    builtin_complex,
    builtin_wedge,
    complex_from_json,
    complex_to_json,
    load_complex,
    load_map,
    map_from_json,
    map_to_json,
    parse_rational,
    read_json,
    save_complex,
    save_map,
)
from lefhopf.scomplex import GeoSelfMap, cycle, rp2_6, sphere, torus7, wedge_spheres


def test_rationals_are_exact():
    assert parse_rational("1/3") == F(1, 3)
    assert parse_rational("-2/4") == F(-1, 2)
    assert parse_rational(5) == 5
    for bad in ("0.333", 0.5, "1e3", "1/0", "abc", True):
        with pytest.raises(FormatError):
            parse_rational(bad)


def test_cycle3_file_has_six_simplices(tmp_path):
    path = tmp_path / "c3.json"
    save_complex(str(path), cycle(3))
    X = load_complex(str(path))
    assert len(X) == 6 and X == cycle(3)


@pytest.mark.parametrize("X", [cycle(5), torus7(), rp2_6(), sphere(3), wedge_spheres(2, 2).wedge], ids=lambda X: X.name)
def test_complex_round_trip(tmp_path, X):
    path = tmp_path / "x.json"
    save_complex(str(path), X)
    Y = load_complex(str(path))
    assert Y == X
    assert list(Y) == list(X)
    assert Y.basepoint == X.basepoint


def test_only_maximal_simplices_are_written():
    data = complex_to_json(torus7())
    assert len(data["simplices"]) == 14
    assert all(len(s) == 3 for s in data["simplices"])


def test_builtin_names():
    assert builtin_complex("sphere:2") == sphere(2)
    assert builtin_complex("cycle:4") == cycle(4)
    assert builtin_complex("torus7") == torus7()
    assert builtin_complex("nope") is None
    assert len(builtin_wedge("wedge_circles:3")) == 3
    assert load_complex("rp2_6") == rp2_6()


def test_complex_diagnostics():
    with pytest.raises(FormatError, match="missing field 'simplices'"):
        complex_from_json({"vertices": ["a"]})
    with pytest.raises(FormatError, match=r"simplices\[1\]: unknown vertex 'z'"):
        complex_from_json({"vertices": ["a", "b"], "simplices": [["a", "b"], ["a", "z"]]})
    with pytest.raises(FormatError, match="not unique"):
        complex_from_json({"vertices": ["a", "a"], "simplices": []})


def test_json_parse_error_has_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "vertices": [\n')
    with pytest.raises(FormatError, match="line"):
        read_json(str(path))


def test_bad_image_edge_names_simplex(tmp_path):
    data = {"name": "bad", "source": "cycle:4", "target": "cycle:4", "vertex_map": {"c0": "c0", "c1": "c2", "c2": "c2", "c3": "c3"}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(FormatError) as e:
        load_map(str(path))
    msg = str(e.value)
    assert "vertex_map" in msg
    assert "c0" in msg and "c2" in msg


def test_decimal_coordinates_rejected():
    data = map_to_json(corpus.circle_map(2))
    w = next(iter(data["subdivision"]["coords"]))
    b = next(iter(data["subdivision"]["coords"][w]))
    data["subdivision"]["coords"][w][b] = "0.5"
    with pytest.raises(FormatError, match="coords"):
        map_from_json(data)


def test_simplicial_map_round_trip(tmp_path):
    f = corpus.antipodal()
    path = tmp_path / "f.json"
    save_map(str(path), f, "antipodal")
    assert load_map(str(path)) == f


@pytest.mark.parametrize("g", [corpus.circle_map(2), corpus.circle_map(-1), corpus.wedge_circle_map()[0]], ids=lambda g: g.name)
def test_geo_selfmap_round_trip(tmp_path, g):
    path = tmp_path / "g.json"
    save_map(str(path), g)
    h = load_map(str(path))
    assert isinstance(h, GeoSelfMap)
    assert h.subdivision.coords == g.subdivision.coords
    assert dict(h.vertex_map.vertex_map) == dict(g.vertex_map.vertex_map)
    raw = json.loads(path.read_text())
    assert all(isinstance(x, str) for c in raw["subdivision"]["coords"].values() for x in c.values())


def test_builtin_maps_and_at_syntax():
    assert load_map("id@torus7").source == torus7()
    assert load_map("circle:3@cycle:3").name == "circle:3"
    with pytest.raises(FormatError):
        load_map("antipodal@cycle:3")
    with pytest.raises(FormatError):
        load_map("missing.json")


def test_map_on_wrong_complex(tmp_path):
    path = tmp_path / "f.json"
    save_map(str(path), corpus.cycle_rotation())
    with pytest.raises(FormatError, match="not on the given complex"):
        load_map(str(path), cycle(4))
