import csv
import json

import pytest

from minkowski2d.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def js(text):
    return json.loads(text)


def test_norm_and_antinorm(capsys):
    rc, out, _ = run(capsys, "norm", "eval", "--plane", "square", "--vec", "0.3,-1.7", "--vec", "2 0")
    assert rc == 0 and js(out)["norm"] == [1.7, 2.0]
    rc, out, _ = run(capsys, "antinorm", "eval", "--plane", "square", "--vec", "0.4,-2")
    assert js(out)["antinorm"] == [pytest.approx(2.4)]


def test_birkhoff(capsys):
    rc, out, _ = run(capsys, "birkhoff", "--plane", "square", "--v", "1,0.5", "--w", "0,1")
    d = js(out)
    assert d["v_perp_w"] is True and d["w_perp_v"] is False


def test_radon(capsys):
    _, out, _ = run(capsys, "radon", "check", "--plane", "hexagon")
    assert js(out)["radon"] is True
    _, out, _ = run(capsys, "radon", "check", "--plane", "lp:4")
    assert js(out)["radon"] is False
    _, out, _ = run(capsys, "radon", "normalize", "--plane", "euclidean")
    assert js(out)["omega_scale"] == pytest.approx(1.0)


def test_circle(capsys, tmp_path):
    _, out, _ = run(capsys, "circle", "perimeter", "--plane", "square", "--antinorm")
    d = js(out)
    assert d["length"] == 8.0 and d["antinorm_length"] == 8.0
    f = tmp_path / "path.csv"
    _, out, _ = run(capsys, "circle", "param", "--plane", "lp:4", "--n", "128", "--out", str(f))
    lines = f.read_text().splitlines()
    assert lines[1] == "u,x,y,dx,dy" and len(lines) == 130


def test_curve_queries(capsys):
    _, out, _ = run(capsys, "curve", "length", "--curve", "reuleaux:1")
    assert js(out)["length"] == pytest.approx(3.14159265, rel=1e-6)
    _, out, _ = run(capsys, "curve", "diameter", "--curve", "ellipse:2,1")
    assert js(out)["diameter"] == pytest.approx(4.0)
    _, out, _ = run(capsys, "curve", "width", "--curve", "ellipse:2,1", "--dir", "0,1")
    d = js(out)
    assert d["width"] == pytest.approx(2.0, rel=1e-6) and d["constant_width"] is False
    _, out, _ = run(capsys, "curve", "support", "--plane", "lp:4", "--curve", "unit_circle", "--u", "0", "--u", "1")
    assert js(out)["h"] == [pytest.approx(1.0), pytest.approx(1.0)]
    _, out, _ = run(capsys, "curve", "curvature", "--curve", "circle:2", "--s", "0.5")
    assert js(out)["radius"] == [pytest.approx(2.0, rel=1e-3)]


def test_build(capsys, tmp_path):
    _, out, _ = run(capsys, "build", "cw", "--spec", '{"width": 1.0, "harmonics": [[3, 0.03]], "n": 2048}')
    assert js(out)["width"] == pytest.approx(1.0, rel=1e-4)
    f = tmp_path / "plane.json"
    run(capsys, "build", "radon", "--arc", '{"lp": 3}', "--out", str(f))
    _, out, _ = run(capsys, "radon", "check", "--plane", str(f))
    assert js(out)["radon"] is True
    _, out, _ = run(capsys, "build", "smooth", "--plane", "square", "--epsilon", "0.05")
    assert js(out)["smooth"] is True
    _, out, _ = run(capsys, "build", "smooth", "--curve", "polygon:5", "--epsilon", "0.05")
    assert js(out)["smooth"] is True


def test_build_rejects_nonconvex(capsys):
    rc, _, err = run(capsys, "build", "cw", "--spec", '{"width": 1.0, "harmonics": [[3, 0.2]]}')
    assert rc == 2 and "not convex" in err


def test_verify_commands(capsys):
    rc, out, _ = run(capsys, "verify", "rs", "--curve", "reuleaux:1", "--seed", "7")
    d = js(out)
    assert rc == 0 and d["equality"] is True and d["seed"] == 7 and d["claim"] == "RS_RADON"
    rc, out, _ = run(capsys, "verify", "antinorm", "--plane", "square", "--curve", "unit_circle")
    d = js(out)
    assert d["lhs"] == pytest.approx(8.0) and d["bound"] == pytest.approx(8.0)
    _, out, _ = run(capsys, "verify", "dual", "--plane", "square", "--curve", "unit_circle")
    assert js(out)["bound"] == pytest.approx(16.0)
    rc, _, _ = run(capsys, "verify", "barbier", "--curve", "reuleaux:1")
    assert rc == 0
    rc, out, _ = run(capsys, "verify", "defect", "--plane", "lp:4", "--curve", "ellipse:1,0.4")
    assert rc == 0 and js(out)["claim"] == "DEFECT_INTEGRAL"


def test_verify_curvsum(capsys, tmp_path):
    f = tmp_path / "cw.json"
    run(capsys, "build", "cw", "--spec", '{"width": 1.0, "harmonics": [[3, 0.03]]}', "--out", str(f))
    rc, out, _ = run(capsys, "verify", "curvsum", "--curve", str(f))
    assert rc == 0 and js(out)["claim"] == "CURVATURE_SUM"


def test_verify_failure_exit_code(capsys, tmp_path):
    rc, _, err = run(capsys, "verify", "rs", "--plane", "square")
    assert rc == 2 and "verify_antinorm_bound" in err
    plane = tmp_path / "sq.json"
    plane.write_text('{"ball": {"type": "polygon", "vertices": [[1, 1], [-1, 1], [-1, -1], [1, -1]]}, "omega_scale": 0.25}')
    rc, _, err = run(capsys, "verify", "dual", "--plane", str(plane), "--curve", "unit_circle")
    assert rc == 1 and "FAILURE" in err


def test_outputs(capsys, tmp_path):
    j = tmp_path / "r.json"
    c = tmp_path / "r.csv"
    s = tmp_path / "r.svg"
    run(capsys, "verify", "rs", "--curve", "ellipse", "--out", str(j), "--svg", str(s))
    assert json.loads(j.read_text())["claim"] == "RS_RADON"
    svg = s.read_text()
    for cls in ("unit-circle", "antinorm-circle", "support-line"):
        assert cls in svg
    run(capsys, "verify", "rs", "--curve", "ellipse", "--out", str(c))
    rows = list(csv.DictReader(c.open()))
    assert rows[0]["claim"] == "RS_RADON"


def test_sweep(capsys, tmp_path):
    c = tmp_path / "sweep.csv"
    rc, out, _ = run(capsys, "sweep", "open-problem", "--plane", "lp:4", "--count", "5", "--n", "256", "--seed", "1", "--out", str(c))
    d = js(out)
    assert rc == 0 and len(d["ratios"]) == 5 and d["candidates"] == []
    assert len(list(csv.DictReader(c.open()))) == 5
