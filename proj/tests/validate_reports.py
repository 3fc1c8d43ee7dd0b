"""Validate CLI reports against the published schema.

usage: validate_reports.py TORUS_GIT SCHEMA

For each command: check the exit code, validate the JSON, check that it
round-trips, that the TSV view lists the same statuses, and re-verify the
hull and interior certificates offline with exact fractions.
"""

import json
import subprocess
import sys
from fractions import Fraction

import jsonschema

RUNS = [
    (["roots", "--type", "A", "--rank", "3"], 0),
    (["roots", "--type", "G", "--rank", "2"], 0),
    (["find-chi", "--type", "A", "--rank", "3", "--bound", "12"], 0),
    (["find-chi", "--type", "A", "--rank", "2", "--bound", "30"], 0),
    (["check-chi", "--type", "A", "--rank", "3", "--chi-omega", "3,3,1"], 0),
    (["check-chi", "--type", "A", "--rank", "3", "--chi-omega", "2,2,2"], 1),
    (["check-chi", "--type", "A", "--rank", "3", "--chi-omega", "1,0,0"], 1),
    (["classify-cells", "--type", "A", "--rank", "3", "--chi-omega", "3,3,1"], 0),
    (["mu", "--type", "A", "--rank", "3", "--chi-omega", "3,3,1", "--word", "2,1", "--lambda", "1,1,0"], 0),
    (["mu", "--type", "A", "--rank", "3", "--state-omega", "2,-1,0;-2,1,0", "--lambda", "0,0,1"], 0),
    (["verify", "--type", "A", "--rank", "3", "--chi-omega", "3,3,1", "--scope", "all"], 0),
    (["verify", "--type", "A", "--rank", "3", "--chi-omega", "2,2,2", "--scope", "flag"], 1),
    (["verify", "--type", "B", "--rank", "3", "--chi-omega", "2,1,2", "--scope", "wonderful"], 0),
    (["verify-flag", "--type", "G", "--rank", "2", "--chi-omega", "2,2"], 0),
    (["verify-flag", "--type", "A", "--rank", "2", "--chi-omega", "1,1"], 1),
    (["picard", "--type", "A", "--rank", "4"], 0),
    (["picard", "--type", "A", "--rank", "2"], 0),
]

USAGE_ERRORS = [
    ["roots", "--type", "A", "--rank", "0"],
    ["check-chi", "--type", "A", "--rank", "3", "--chi-omega", "3;3;1"],
    ["verify", "--type", "A", "--rank", "2", "--chi-omega", "2,2", "--scope", "wonderful"],
]


def check_verdict(v):
    """Exact offline check of the hull and interior parts of a verdict."""
    if "hull" in v:
        coefs = [Fraction(e["coef"]) for e in v["hull"]]
        assert all(c >= 0 for c in coefs) and sum(coefs) == 1, "hull coefficients"
        dim = len(v["hull"][0]["weight"])
        for j in range(dim):
            assert sum(c * e["weight"][j] for c, e in zip(coefs, v["hull"])) == 0, "hull sum"
    for d in v.get("directions", []):
        sign = -1 if d["target"][0] == "-" else 1
        j = int(d["target"][2:]) - 1
        comb = d["combination"]
        dim = len(comb[0]["weight"])
        for k in range(dim):
            total = sum(Fraction(e["coef"]) * e["weight"][k] for e in comb)
            assert total == (sign if k == j else 0), "direction " + d["target"]
            assert all(Fraction(e["coef"]) >= 0 for e in comb)
    return 1 if ("hull" in v or "directions" in v) else 0


def walk_verdicts(node):
    if isinstance(node, dict):
        if "kind" in node and "state_size" in node:
            yield node
        for value in node.values():
            yield from walk_verdicts(value)
    elif isinstance(node, list):
        for value in node:
            yield from walk_verdicts(value)


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, expected in RUNS:
        run = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        try:
            assert run.returncode == expected, f"exit {run.returncode}, expected {expected}"
            doc = json.loads(run.stdout)
            validator.validate(doc)
            assert json.loads(json.dumps(doc)) == doc
            tsv = subprocess.run([exe, *args, "--format", "tsv"], capture_output=True, text=True, check=False)
            assert tsv.returncode == expected
            rows = [l.split("\t") for l in tsv.stdout.splitlines() if l and not l.startswith("#")][1:]
            assert [(r[0], r[1]) for r in rows] == [(s["name"], s["status"]) for s in doc["sections"]]
            checked = sum(check_verdict(v) for v in walk_verdicts(doc))
            print(f"ok    {label}  ({len(doc['sections'])} sections, {checked} certificates re-checked)")
        except (AssertionError, jsonschema.ValidationError, json.JSONDecodeError) as e:
            failures += 1
            print(f"FAIL  {label}: {e}")
    for args in USAGE_ERRORS:
        run = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        if run.returncode != 2 or run.stdout:
            failures += 1
            print(f"FAIL  {' '.join(args)}: exit {run.returncode}")
        else:
            print(f"ok    {' '.join(args)}  (exit 2)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
