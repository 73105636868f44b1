"""Runs the bbd CLI in --json mode and validates each document against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing

bbd, schema_dir, golden = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = referencing.Registry().with_resources(
    (name, referencing.Resource.from_contents(s)) for name, s in schemas.items()
)


def run(*args, expect=0):
    proc = subprocess.run([bbd, "--json", *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


def check(schema, doc, label):
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        sys.exit(f"{label}: {errors[0].message}")
    print(f"ok {label}")


d10 = str(golden / "d10.bbd")
d8 = str(golden / "d8.bbd")
with tempfile.TemporaryDirectory() as tmp:
    cycle = pathlib.Path(tmp) / "cycle.bbd"
    cycle.write_text(subprocess.run([bbd, "exemplar", "cycle", "--a", "4"], capture_output=True, text=True).stdout)

    for name in ("d10", "d8"):
        check("exemplar.schema.json", run("exemplar", name), f"exemplar {name}")
    check("exemplar.schema.json", run("exemplar", "complete", "--p", "2", "--q", "3"), "exemplar complete")
    for f in (d10, d8, str(cycle)):
        check("check.schema.json", run("check", f), f"check {pathlib.Path(f).name}")
        check("spectrum.schema.json", run("spectrum", f), f"spectrum {pathlib.Path(f).name}")
    check("witness.schema.json", run("witness", d10, "--length", "2"), "witness 2")
    check("witness.schema.json", run("witness", d10, "--length", "8"), "witness 8")
    check("iso.schema.json", run("iso", d10, d10), "iso same")
    check("iso.schema.json", run("iso", d10, d8), "iso different")
    for theorem in ("t12", "t13", "t14", "t15", "t16", "cor"):
        for f in (d10, d8, str(cycle)):
            check("verdict.schema.json", run("verify", f, "--theorem", theorem), f"verify {theorem} {pathlib.Path(f).name}")
    check("hunt.schema.json", run("hunt", "--theorem", "t16", "--a", "5", "--count", "300", "--seed", "3"), "hunt structured")
    check("hunt.schema.json", run("hunt", "--theorem", "t15", "--mode", "random", "--a", "4", "--count", "300", "--no-timing"), "hunt random")
    check("hunt.schema.json", run("hunt", "--theorem", "t12", "--mode", "exhaustive", "--a", "2", "--count", "256"), "hunt exhaustive")
