"""Validates the scenario corpus and a run report against the shipped JSON schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

schemas_dir, scenarios_dir, pflat = map(pathlib.Path, sys.argv[1:4])
schemas = {p.name: json.loads(p.read_text()) for p in schemas_dir.glob("*.schema.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


def check(name, doc, where):
    errors = sorted(validator(name).iter_errors(doc), key=lambda e: list(e.path))
    for e in errors:
        print(f"{where}: {'/'.join(map(str, e.path))}: {e.message}")
    return not errors


ok = True
docs = {"gl2_algebra.json": "algebra.schema.json", "gl2_k.json": "subalgebra.schema.json",
        "gl2_rep.json": "rep.schema.json"}
for name, schema in docs.items():
    ok &= check(schema, json.loads((scenarios_dir / "docs" / name).read_text()), name)
files = sorted(p for p in scenarios_dir.glob("*.json") if not p.name.startswith("invalid_"))
for p in files:
    ok &= check("scenario.schema.json", json.loads(p.read_text()), p.name)
bundles = sorted((scenarios_dir / "catalog").glob("*.json"))
for p in bundles:
    ok &= check("bundle.schema.json", json.loads(p.read_text()), p.name)
for bad in ["invalid_unknown_check.json", "invalid_rational.json"]:
    if check("scenario.schema.json", json.loads((scenarios_dir / bad).read_text()), bad + " (expected invalid)"):
        print(f"{bad}: unexpectedly valid")
        ok = False

run = subprocess.run([str(pflat), "run", "--format", "json", *map(str, files + bundles),
                      str(scenarios_dir / "invalid_rational.json")], capture_output=True, text=True)
ok &= check("report.schema.json", json.loads(run.stdout), "run report")
print("schemas ok" if ok else "schema validation failed")
sys.exit(0 if ok else 1)
