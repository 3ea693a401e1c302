import json

import pytest

from polyscribe.cli import main
from polyscribe.corpus import named_polytope
from polyscribe.maps import serialize_map_json


@pytest.fixture
def mapfile(tmp_path):
    def write(name):
        p = tmp_path / f"{name}.json"
        p.write_text(serialize_map_json(named_polytope(name)))
        return str(p)
    return write


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_analyze_json_deterministic(mapfile, capsys):
    f = mapfile("triakis-tetrahedron")
    rc1, out1 = run(capsys, "analyze", f, "--json")
    rc2, out2 = run(capsys, "--json", "analyze", f)
    assert rc1 == rc2 == 0
    assert out1 == out2          # timing excluded, output is byte-stable
    rep = json.loads(out1)
    assert rep["verdicts"]["inscribable"] == "NO"
    assert rep["verdicts"]["circumscribable"] == "YES"


def test_analyze_verify_certificates(mapfile, capsys):
    rc, out = run(capsys, "analyze", mapfile("cube"), "--json",
                  "--verify-certificates")
    rep = json.loads(out)
    assert rc == 0 and rep["certificates_verified"] is True


def test_decide_exit_codes(mapfile, capsys, tmp_path):
    rc, out = run(capsys, "decide", mapfile("cube"), "--question", "inscribable")
    assert rc == 0 and "YES" in out
    rc, out = run(capsys, "decide", mapfile("rhombic-dodecahedron"),
                  "--question", "hyperboloid", "--json")
    assert rc == 0 and json.loads(out)["answer"] == "NO"
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["decide", str(bad), "--question", "inscribable"]) == 1
    assert main(["analyze", str(tmp_path / "missing.json")]) == 1


def test_generate_check_scribe_pipeline(tmp_path, capsys):
    pts = tmp_path / "c6.json"
    rc, _ = run(capsys, "generate", "--family", "cyclic-trig", "--n", "6",
                "--d", "4", "-o", str(pts))
    assert rc == 0
    rc, out = run(capsys, "check", str(pts), "--json")
    assert rc == 0 and json.loads(out)["status"] == "PASS"
    rc, out = run(capsys, "scribe", str(pts), "--k", "0", "--json")
    assert rc == 0 and json.loads(out)["holds"] is True


def test_generate_named_coordinates_roundtrip(tmp_path, capsys):
    pts = tmp_path / "cube.json"
    mp = tmp_path / "cube-map.json"
    assert run(capsys, "generate", "--family", "cube", "--coordinates",
               "-o", str(pts))[0] == 0
    assert run(capsys, "generate", "--family", "cube", "-o", str(mp))[0] == 0
    rc, out = run(capsys, "check", str(pts), "--map", str(mp), "--json")
    res = json.loads(out)["results"]
    assert rc == 0 and res["on_sphere"] and res["map_facets_match"]


def test_generate_unknown_family(capsys):
    assert main(["generate", "--family", "nonexistent-solid"]) == 1


def test_caps_and_separator(tmp_path, capsys):
    pts = tmp_path / "octa.json"
    capsfile = tmp_path / "caps.json"
    assert run(capsys, "generate", "--family", "octahedron", "--coordinates",
               "-o", str(pts))[0] == 0
    # octahedron vertices lie ON the unit sphere; scale by 2 so every vertex
    # is exterior and defines a visibility cap
    from fractions import Fraction

    from polyscribe.points import (PointConfiguration, parse_points_json,
                                   serialize_points_json)
    pc = parse_points_json(pts.read_text())
    scaled = tuple(tuple(2 * Fraction(c) for c in p) for p in pc.points)
    pts.write_text(serialize_points_json(PointConfiguration(3, scaled)))
    assert run(capsys, "caps", "--from-points", str(pts),
               "-o", str(capsfile))[0] == 0
    rc, out = run(capsys, "caps", str(capsfile), "--ply", "exact", "--json")
    assert rc == 0 and json.loads(out)["ply"]["depth"] == 3
    rc1, out1 = run(capsys, "separator", str(capsfile), "--trials", "20",
                    "--seed", "3", "--json")
    rc2, out2 = run(capsys, "--seed", "3", "separator", str(capsfile),
                    "--trials", "20", "--json")
    assert rc1 == rc2 == 0 and out1 == out2
    rc3, out3 = run(capsys, "separator", str(capsfile), "--trials", "20",
                    "--seed", "4", "--json")
    assert json.loads(out3)["hit_counts"] != json.loads(out1)["hit_counts"]
