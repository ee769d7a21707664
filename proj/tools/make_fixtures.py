#!/usr/bin/env python3
"""Writes the bundled instance files under data/."""

import json
import math
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def torus_grid(n):
    faces = [f"f_{i}_{j}" for i in range(n) for j in range(n)]
    vertices = [f"v_{i}_{j}" for i in range(n) for j in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            edges.append({"id": f"ev_{i}_{j}", "sides": [f"f_{(i - 1) % n}_{j}", f"f_{i}_{j}"],
                          "endpoints": [f"v_{i}_{j}", f"v_{i}_{(j + 1) % n}"]})
            edges.append({"id": f"eh_{i}_{j}", "sides": [f"f_{i}_{(j - 1) % n}", f"f_{i}_{j}"],
                          "endpoints": [f"v_{i}_{j}", f"v_{(i + 1) % n}_{j}"]})
    return faces, vertices, edges


def octagon_fan():
    faces = [f"t{k}" for k in range(8)]
    edges = [{"id": f"s{k}", "sides": [f"t{(k + 7) % 8}", f"t{k}"], "endpoints": ["c", "p"]} for k in range(8)]
    for name, (a, b) in zip("abcd", [(0, 2), (1, 3), (4, 6), (5, 7)]):
        edges.append({"id": name, "sides": [f"t{a}", f"t{b}"], "endpoints": ["p", "p"]})
    return faces, ["c", "p"], edges


def octagon():
    edges = [{"id": name, "sides": ["o", "o"], "endpoints": ["p", "p"]} for name in "abcd"]
    return ["o"], ["p"], edges


def instance(name, description, geometry, complex_, d_of, cone_of):
    faces, vertices, edges = complex_
    return {
        "name": name,
        "description": description,
        "geometry": geometry,
        "faces": [{"id": f} for f in faces],
        "vertices": vertices,
        "edges": [{"id": e["id"], "sides": e["sides"], "D": d_of(e["id"]), "endpoints": e["endpoints"]} for e in edges],
        "cone_angles": {f: cone_of(f) for f in faces},
    }


def write(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def main():
    half_pi = math.pi / 2
    for n in (2, 3, 4):
        write(DATA / f"torus_{n}x{n}.json",
              instance(f"torus_{n}x{n}", f"flat square torus, {n}x{n} grid, orthogonal circles", "euclidean",
                       torus_grid(n), lambda e: "90deg", lambda f: "360deg"))
    write(DATA / "torus_2x2_hyp.json",
          instance("torus_2x2_hyp", "2x2 torus grid, orthogonal circles, cone angles 2pi - 0.1", "hyperbolic",
                   torus_grid(2), lambda e: half_pi, lambda f: 2 * math.pi - 0.1))
    write(DATA / "torus_2x2_phi2pi_hyp.json",
          instance("torus_2x2_phi2pi_hyp", "2x2 torus grid with smooth centres: no hyperbolic pattern", "hyperbolic",
                   torus_grid(2), lambda e: half_pi, lambda f: 2 * math.pi))
    write(DATA / "torus_3x3_hyp.json",
          instance("torus_3x3_hyp", "3x3 torus grid, unequal intersection angles", "hyperbolic", torus_grid(3),
                   lambda e: 1.4 if e.startswith("eh") else 1.7, lambda f: 2 * math.pi - 0.3))
    write(DATA / "genus2_fan_hyp.json",
          instance("genus2_fan_hyp", "genus-2 octagon coned to its centre, eight triangles", "hyperbolic",
                   octagon_fan(), lambda e: half_pi, lambda f: math.pi))
    write(DATA / "genus2_fan_euc.json",
          instance("genus2_fan_euc", "genus-2 octagon coned to its centre, Euclidean", "euclidean", octagon_fan(),
                   lambda e: half_pi, lambda f: 1.5 * math.pi))
    write(DATA / "genus2_octagon_hyp.json",
          instance("genus2_octagon_hyp", "genus-2 surface as one octagon with four loop edges", "hyperbolic",
                   octagon(), lambda e: half_pi, lambda f: 2 * math.pi))

    bad_d = instance("bad_D", "intersection angle out of range", "hyperbolic", torus_grid(2),
                     lambda e: half_pi, lambda f: 2 * math.pi - 0.1)
    bad_d["edges"][3]["D"] = 3.5
    write(DATA / "invalid" / "bad_D.json", bad_d)
    missing = instance("missing_face", "edge side names a face that does not exist", "hyperbolic", torus_grid(2),
                       lambda e: half_pi, lambda f: 2 * math.pi - 0.1)
    missing["edges"][0]["sides"][0] = "f_9_9"
    write(DATA / "invalid" / "missing_face.json", missing)
    duplicate = instance("duplicate_face", "face id listed twice", "euclidean", torus_grid(2),
                         lambda e: "90deg", lambda f: "360deg")
    duplicate["faces"].append({"id": "f_0_0"})
    write(DATA / "invalid" / "duplicate_face.json", duplicate)
    (DATA / "invalid" / "malformed.json").write_text('{\n  "geometry": "euclidean",\n  "faces": [\n    {"id": "f0"\n  ]\n}\n')


if __name__ == "__main__":
    main()
