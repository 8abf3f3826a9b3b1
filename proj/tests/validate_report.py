"""Run the CLI with --json, validate against the report schema, and check that
two runs agree once timing is dropped."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))

cases = [
    ["stats", "--n", "6", "--k", "3"],
    ["stats", "--n", "7", "--k", "3", "--stream"],
    ["morse", "--n", "6", "--check-restriction"],
    ["morse", "--d52"],
    ["homology", "--n", "5", "--k", "2", "--mode", "int"],
    ["reproduce"],
    ["reproduce", "--list"],
]

failed = False
for args in cases:
    runs = []
    for _ in range(2):
        p = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
        if p.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {p.returncode}\n{p.stderr}")
            failed = True
            break
        report = json.loads(p.stdout)
        try:
            jsonschema.validate(report, schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(args)}: {e.message}")
            failed = True
            break
        report.pop("timing")
        runs.append(report)
    else:
        if runs[0] != runs[1]:
            print(f"FAIL {' '.join(args)}: output differs between runs")
            failed = True
        else:
            print(f"ok   {' '.join(args)}")

sys.exit(1 if failed else 0)
