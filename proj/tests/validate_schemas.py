"""Runs the torickit binary over the fixtures and validates every JSON
document it prints against the published schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, root = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())


def validator(name):
    return Draft202012Validator(schemas[f"{name}.schema.json"], registry=registry)


failures = []


def check(doc, name, label):
    errors = list(validator(name).iter_errors(doc))
    if errors:
        failures.append(f"{label}: {errors[0].message}")


def run(args, schema, expect_code):
    proc = subprocess.run([str(binary), *args], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != expect_code:
        failures.append(f"{label}: exit {proc.returncode}, expected {expect_code}")
        return
    doc = json.loads(proc.stdout)
    check(doc, "error" if "error" in doc else schema, label)


catalog = sorted((root / "data" / "catalog").glob("*.json"))
for fixture in catalog:
    check(json.loads(fixture.read_text()), "fan", fixture.name)
    run(["analyze", str(fixture)], "analyze", 0)
    # Four-dimensional projective space has thousands of subfans; skip it here.
    if fixture.stem != "cp4":
        run(["subfans", str(fixture), "--classify"], "subfans", 0)
    code = 3 if fixture.stem == "c2" else 0
    run(["stability", str(fixture)], "stability", code)

tmp = pathlib.Path(tempfile.mkdtemp())
tuple_doc = {"schema_version": 1, "polynomials": [
    {"coefficients": [["1", "0"], ["0", "0"]]},
    {"coefficients": [["0", "3"], ["-3", "-1"]]},
]}
check(tuple_doc, "poly_tuple", "tuple fixture")
(tmp / "tuple.json").write_text(json.dumps(tuple_doc))
cp1 = str(root / "data" / "catalog" / "cp1.json")
run(["holcheck", cp1, str(tmp / "tuple.json")], "holcheck", 0)
run(["stabilize", cp1, str(tmp / "tuple.json"), "--increment", "1,1"], "stabilize", 0)
run(["stabilize", cp1, str(tmp / "tuple.json"), "--increment", "1,2"], "error", 3)
hz = str(root / "data" / "catalog" / "hirzebruch_2.json")
run(["stability", hz, "--free", "1=3,2=5"], "stability", 0)
run(["stability", hz, "--degrees", "1,1,1,1"], "error", 3)

(tmp / "overlap.json").write_text(json.dumps({"schema_version": 1, "dimension": 2,
                                               "generators": [[1, 0], [0, 1], [1, 1]],
                                               "maximal_cones": [[1, 2], [2, 3]]}))
run(["analyze", str(tmp / "overlap.json")], "analyze", 2)
run(["subfans", str(tmp / "overlap.json")], "subfans", 2)
(tmp / "broken.json").write_text("{\"dimension\": ")
run(["analyze", str(tmp / "broken.json")], "error", 1)

# The schemas must also reject malformed documents.
for name, doc in [
    ("stability", {"kind": "HOMOTOPY"}),
    ("error", {"error": "lower_case", "message": "x"}),
    ("fan", {"schema_version": 1, "dimension": 2, "generators": [[1, 0]], "maximal_cones": [[0]]}),
    ("holcheck", {"member": "yes", "degrees": [1], "witness": None}),
]:
    if validator(name).is_valid(doc):
        failures.append(f"{name} schema accepted a malformed document")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} schema failures")
sys.exit(1 if failures else 0)
