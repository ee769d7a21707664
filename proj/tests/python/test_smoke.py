import math
import os
import xml.etree.ElementTree as ET

import pytest

import circlepat

DATA = os.environ.get("CIRCLEPAT_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def data(name):
    return os.path.join(DATA, name)


def test_load_canonical():
    doc = circlepat.load(data("torus_2x2.json"))
    assert doc["geometry"] == "euclidean"
    assert len(doc["faces"]) == 4
    assert circlepat.load(doc) == doc


def test_check_verdicts():
    ok = circlepat.check(data("torus_2x2_hyp.json"))
    assert ok["status"] == "feasible"
    assert ok["margin"] == pytest.approx(0.2)
    bad = circlepat.check(data("torus_2x2_phi2pi_hyp.json"))
    assert bad["status"] == "infeasible"
    assert len(bad["certificate"]["faces"]) == 4


def test_solve_flat_torus():
    report = circlepat.solve(data("torus_2x2.json"))
    assert all(r == pytest.approx(0.25, rel=1e-12) for r in report["radii"].values())
    assert report["residual"] < 1e-12


def test_round_trip_through_forward_map():
    inst = circlepat.load(data("genus2_fan_hyp.json"))
    truth = {f["id"]: 0.3 + 0.2 * i for i, f in enumerate(inst["faces"])}
    cones = circlepat.forward_map(inst, truth)["cone"]
    inst["cone_angles"] = cones
    report = circlepat.solve(inst, method="newton")
    for face, r in truth.items():
        assert report["radii"][face] == pytest.approx(r, abs=1e-8)
    assert report["kkt_ok"] is True
    start = {face: 1.0 for face in truth}
    again = circlepat.solve(inst, method="iterative", initial_radii=start)
    for face, r in truth.items():
        assert again["radii"][face] == pytest.approx(r, abs=1e-8)


def test_errors():
    with pytest.raises(circlepat.InputError, match="/edges/3/D"):
        circlepat.load(data(os.path.join("invalid", "bad_D.json")))
    with pytest.raises(ValueError):
        circlepat.check('{"geometry": "euclidean"')
    with pytest.raises(circlepat.InfeasibleError):
        circlepat.solve(data("torus_2x2_phi2pi_hyp.json"))
    with pytest.raises(circlepat.InputError):
        circlepat.solve(data("torus_2x2.json"), gauge="face:nope")


def test_special_and_triangles():
    assert circlepat.lobachevsky(0.0) == 0.0
    assert abs(circlepat.lobachevsky(math.pi / 2)) < 1e-15
    l, p1, p2 = circlepat.euclidean_apex(3.0, 4.0, math.pi / 2)
    assert l == pytest.approx(5.0)
    assert p1 == pytest.approx(math.atan2(3, 4))
    l, p1, p2 = circlepat.hyperbolic_apex(1.0, 1.0, math.pi / 2)
    assert l == pytest.approx(math.acosh(math.cosh(1.0) ** 2))
    assert p1 == pytest.approx(p2)


def test_export_svg_is_xml_and_deterministic():
    inst = data("genus2_fan_hyp.json")
    report = circlepat.solve(inst)
    svg, layout = circlepat.export(inst, report)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert svg == circlepat.export(inst, report)[0]
    assert layout["model"] == "poincare_disk"
    assert len(layout["faces"]) == 8
