"""Run gradus with --format json and validate every document against its schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    binary, schema_dir, inputs = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    p2, p7, jx6, m = (str(inputs / f) for f in ("p2.json", "p7.json", "jx6.json", "max.json"))
    theta = "x0^2+x1^2+x2^2+x0*x1+x1*x2"
    runs = [
        ("points", ["points", "--s", "4", "--seed", "2"]),
        ("points", ["points", "--s", "3", "--field", "Q"]),
        ("ideal", ["ideal", "--points", p7]),
        ("ideal", ["ideal", "--gens", "x0^2,x1^3", "--basis", "minimal"]),
        ("hilbert", ["hilbert", "--points", p7]),
        ("hilbert", ["hilbert", "--ideal", m, "--max-degree", "3"]),
        ("betti", ["betti", "--points", p2]),
        ("betti", ["betti", "--points", p7, "--ideal", jx6]),
        ("socle", ["socle", "--points", p7, "--ideal", jx6]),
        ("artinian", ["artinian", "--points", p7]),
        ("hom", ["hom", "--points", p7, "--ideal", jx6, "--range", "0:4"]),
        ("hom", ["hom", "--points", p7, "--ideal", jx6, "--range", "2:4", "--theta", theta]),
        ("experiment", ["experiment", "reproduce", "--all"]),
        ("experiment", ["experiment", "monomial"]),
        ("experiment", ["experiment", "socle-groups", "--max-s", "6", "--trials", "1"]),
    ]
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for index, (kind, args) in enumerate(runs):
            schema = json.loads((schema_dir / f"{kind}.schema.json").read_text())
            out = Path(tmp) / f"{index}.json"
            proc = subprocess.run([binary, *args, "--format", "json", "-o", str(out)], capture_output=True, text=True)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            try:
                jsonschema.validate(json.loads(out.read_text()), schema)
                print(f"ok   {label}")
            except jsonschema.ValidationError as err:
                print(f"FAIL {label}: {err.message}")
                failures += 1
        for path in sorted(inputs.glob("*.json")):
            kind = "points" if "points" in json.loads(path.read_text()) else "ideal"
            schema = json.loads((schema_dir / f"{kind}.schema.json").read_text())
            try:
                jsonschema.validate(json.loads(path.read_text()), schema)
                print(f"ok   {path.name}")
            except jsonschema.ValidationError as err:
                print(f"FAIL {path.name}: {err.message}")
                failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
