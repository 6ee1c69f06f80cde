"""Validates the shipped data files and fresh mvmcheck reports against schemas/."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def load(path):
    with open(path) as f:
        return json.load(f)


def main():
    root, mvmcheck = Path(sys.argv[1]), sys.argv[2]
    schemas = {name: load(root / "schemas" / f"{name}.schema.json")
               for name in ("algebra", "poset", "corelation", "report")}
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    jsonschema.validate(load(root / "data" / "broken.json"), schemas["algebra"])
    for name in ("chain2.json", "vee.json"):
        jsonschema.validate(load(root / "data" / name), schemas["poset"])
    jsonschema.validate([[["bot", 0], ["top", 1]]], schemas["corelation"])

    runs = [
        ["axioms", "--model", "luka:2"],
        ["axioms", "--model", f"file:{root / 'data' / 'broken.json'}"],
        ["corel", "effective", "--poset", str(root / "data" / "chain2.json")],
        ["congruence", "--model", "luka:1"],
        ["dist", "--model", "lex-z-flat"],
    ]
    for args in runs:
        out = subprocess.run([mvmcheck, *args, "--format", "json"], capture_output=True, text=True)
        if out.returncode not in (0, 1):
            sys.exit(f"{args}: exit {out.returncode}: {out.stderr}")
        jsonschema.validate(json.loads(out.stdout), schemas["report"])
    print("schemas ok")


if __name__ == "__main__":
    main()
