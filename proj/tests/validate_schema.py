"""Validate `agolomb verify --format json` output against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    (["verify", "--order", "2", "--count", "20000"], 0),
    (["verify", "--order", "3", "--count", "20000", "--suite", "all"], 0),
    (["verify", "--order", "4", "--count", "20000", "--suite", "automata"], 1),
    (["verify", "--order", "5", "--count", "20000", "--source", "recurrence"], 0),
    (["verify", "--order", "9", "--count", "5000", "--suite", "definition"], 0),
    (["verify", "--gap", "2", "--count", "20000"], 1),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for args, want_rc in RUNS:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != want_rc:
            print(f"FAIL {label}: exit {proc.returncode}, want {want_rc}\n{proc.stderr}")
            bad += 1
            continue
        report = json.loads(proc.stdout)
        errors = list(validator.iter_errors(report))
        failing = sum(not c["pass"] for c in report["checks"])
        if failing != report["failures"] or report["pass"] != (failing == 0):
            errors.append("pass/failures disagree with the check list")
        for e in errors[:5]:
            print(f"FAIL {label}: {getattr(e, 'message', e)}")
        bad += bool(errors)
        if not errors:
            print(f"ok   {label} ({len(report['checks'])} checks)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
