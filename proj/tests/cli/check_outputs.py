"""Runs the squig executable and checks its payloads.

usage: check_outputs.py <squig executable> <schema directory>

JSON payloads are validated against the shipped schemas; SVG payloads are
parsed as XML and their outlines checked against the expected geometry.
"""

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import jsonschema

SVG = "{http://www.w3.org/2000/svg}"

exe = sys.argv[1]
schemas = Path(sys.argv[2])
failures = []


def check(cond, what):
    if not cond:
        failures.append(what)


def run(*args, expect=0):
    p = subprocess.run([exe, *args], capture_output=True, text=True)
    check(p.returncode == expect, f"{' '.join(args)}: exit {p.returncode}, expected {expect}: {p.stderr.strip()}")
    return p.stdout


def schema(name):
    return json.loads((schemas / f"{name}.schema.json").read_text())


def validate(payload, name, what):
    try:
        doc = json.loads(payload)
        jsonschema.validate(doc, schema(name))
        return doc
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{what}: {e}")
        return None


for name in ("eval", "series", "constants", "verify_report"):
    jsonschema.Draft7Validator.check_schema(schema(name))

# eval
for args in (["--n", "4", "--fn", "sin", "--z", "1.8540747"],
             ["--n", "3", "--fn", "sin", "--z", "0"],
             ["--n", "5", "--fn", "cos", "--z", "0.3-0.2i"],
             ["--n", "4", "--fn", "arcsin", "--z", "0.5+0.5i"],
             ["--n", "6", "--fn", "F", "--z", "0.7+0.3i"],
             ["--n", "3", "--fn", "sin", "--z", "0.8833193751427248+1.5299540370571922i"]):
    validate(run("eval", *args), "eval", "eval " + " ".join(args))
doc = validate(run("eval", "--n", "4", "--fn", "sin", "--z", "1.8540747"), "eval", "eval A_4")
if doc:
    check(abs(doc["value"]["re"] - 1.0) < 1e-7 and abs(doc["value"]["im"]) < 1e-12, "sin_4(A_4) != 1")
run("eval", "--n", "4", "--fn", "sin", "--z", "10+10i", expect=3)
run("eval", "--n", "4", "--fn", "sin", "--z", "1+", expect=2)

# series
doc = validate(run("series", "--n", "3", "--terms", "5"), "series", "series n=3")
if doc:
    check([(r["degree"], r["numerator"], r["denominator"]) for r in doc["rows"]]
          == [(1, "1", "1"), (4, "-1", "6"), (7, "2", "63"), (10, "-13", "2268"), (13, "23", "22113")],
          "series n=3 rows")
doc = validate(run("series", "--n", "4", "--terms", "40"), "series", "series n=4")
if doc:
    check(abs(doc["radius_estimate"] / doc["R_n"] - 1) < 1e-2, "series n=4 radius estimate")
validate(run("series", "--n", "3", "--terms", "1"), "series", "series n=3 terms=1")

# constants
doc = validate(run("constants"), "constants", "constants")
if doc:
    check([c["n"] for c in doc] == [3, 4, 5, 6, 7, 8], "constants default n")

# verify
out = run("verify", "--n", "4", "--only", "integral_ray,winding,sc_factorization", "--stable")
doc = validate(out, "verify_report", "verify n=4")
if doc:
    check([r["name"] for r in doc] == ["integral_ray", "sc_factorization", "winding"], "verify order")
    check(all(r["pass"] for r in doc), "verify n=4 passes")
check(out == run("verify", "--n", "4", "--only", "integral_ray,winding,sc_factorization", "--stable"),
      "verify --stable is not byte-identical")
doc = validate(run("verify", "--n", "4", "--tol", "identity=1e-15", expect=1), "verify_report", "verify tight")
if doc:
    check(any(not r["pass"] for r in doc), "tight tolerance produced no failure")


# grid
def points(poly):
    pts = []
    for pair in poly.get("points").split():
        x, y = pair.split(",")
        pts.append(complex(float(x), -float(y)))
    return pts


def corners(pts, tol=1e-5):
    """Distinct polyline vertices where the direction changes."""
    if abs(pts[0] - pts[-1]) < tol:
        pts = pts[:-1]
    out = []
    m = len(pts)
    for i in range(m):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % m]
        u, v = b - a, c - b
        if abs(u) < tol or abs(v) < tol:
            continue
        if abs((u.conjugate() * v).imag) > tol * abs(u) * abs(v):
            out.append(b)
    return out


def grid(*args):
    text = run("grid", *args)
    try:
        root = ET.fromstring(text)
    except ET.ParseError as e:
        failures.append(f"grid {' '.join(args)}: {e}")
        return None, text
    check(root.tag == SVG + "svg", "svg root element")
    return root, text


root, text = grid("--n", "4", "--map", "F")
if root is not None:
    outline = [p for p in root.iter(SVG + "polyline") if p.get("class") == "outline"]
    check(len(outline) == 1, "n=4 F: one outline")
    if outline:
        pts = points(outline[0])
        c = corners(pts)
        check(len(c) == 3, f"n=4 F: outline has {len(c)} corners, expected a triangle")
        if len(c) == 3:
            o = min(c, key=abs)
            a, b = sorted((z for z in c if z != o), key=lambda z: math.atan2(z.imag, z.real))
            check(abs(abs(a - o) - abs(b - o)) < 1e-5, "n=4 F: legs differ")
            check(abs(((a - o).conjugate() * (b - o)).real) < 1e-5, "n=4 F: no right angle at O")
            p = 0.9270373386506853 + 0.9270373386506853j
            check(abs((a + b) / 2 - p) < 1e-5, "n=4 F: P is not the hypotenuse midpoint")
            check(any(abs(z - p) < 1e-5 for z in pts), "n=4 F: P missing from the outline")
    check(text == run("grid", "--n", "4", "--map", "F"), "grid output is not deterministic")

root, _ = grid("--n", "6", "--map", "sin", "--density", "8")
if root is not None:
    outline = [p for p in root.iter(SVG + "polyline") if p.get("class") == "outline"]
    if outline:
        c = corners(points(outline[0]))
        check(len(c) == 12, f"n=6 sin: outline has {len(c)} corners, expected 12")
        sides = [abs(c[i] - c[i - 1]) for i in range(len(c))]
        check(max(sides) - min(sides) < 1e-5, "n=6 sin: outline is not equilateral")
    else:
        failures.append("n=6 sin: no outline")

root, _ = grid("--n", "3", "--map", "sin", "--density", "8")
if root is not None:
    outline = [p for p in root.iter(SVG + "polyline") if p.get("class") == "outline"]
    if outline:
        c = corners(points(outline[0]))
        check(len(c) == 6, f"n=3 sin: outline has {len(c)} corners, expected a hexagon")
    poles = [complex(float(e.get("cx")), -float(e.get("cy")))
             for e in root.iter(SVG + "circle") if e.get("class") == "pole"]
    check(len(poles) == 3, f"n=3 sin: {len(poles)} pole markers")
    r3 = 1.7666387502854500
    check(all(abs(abs(z) - r3) < 1e-5 for z in poles), "n=3 sin: poles off |z| = R_3")
    labels = sorted(t.text for t in root.iter(SVG + "text"))
    check(labels == ["A", "B", "O", "P"], f"n=3 sin: labels {labels}")

run("grid", "--n", "4", "--map", "F", "--density", "1", expect=2)

if failures:
    for f in failures:
        print("FAIL", f)
    sys.exit(1)
print("all CLI outputs valid")
