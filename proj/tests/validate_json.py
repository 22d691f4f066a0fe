"""Run the tool with --json and validate every document against the shipped schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    (["resolve", "y^2 - x^3"], 0),
    (["resolve", "x*y*(x - y)"], 0),
    (["zeta", "x^2 - y^5"], 0),
    (["hilb", "y^3 - x^4", "--max-k", "6", "--specialize", "weight"], 0),
    (["hilb", "x*y", "--max-k", "4", "--specialize", "q=7"], 0),
    (["hilb", "x", "--max-k", "4"], 0),
    (["qseries", "(y^2 - x^3)*x", "--order", "6"], 0),
    (["verify", "y^2 - x^3", "--primes", "3,5", "--max-k", "4"], 0),
    (["verify", "y^2 - 9x^2 - x^3", "--primes", "3,5", "--max-k", "3"], 3),
    (["zeta", "y^2 - * x"], 2),
    (["zeta", "x + 1"], 2),
    (["hilb", "x"], 2),
    (["zeta", "y^2 - 2x^2"], 1),
    (["resolve", "x^2"], 1),
]


def main() -> int:
    tool, schema_path, data_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    for bad in ({"command": "zeta"}, {"command": "zeta", "ok": False}, {"command": "hilb", "ok": True, "extra": 1}):
        if validator.is_valid(bad):
            print(f"FAIL schema accepts {bad}")
            return 1

    cases = CASES + [(["hilb", "--resolution", str(data_dir / "smooth_surface.resolution"), "--max-k", "5"], 0)]
    failures = 0
    for args, expected in cases:
        proc = subprocess.run([tool, "--json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            for e in errors:
                print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
