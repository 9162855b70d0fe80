#!/usr/bin/env python3
"""Run cm with --format json and validate every output against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ("hopfPoly", ["nf", "--dim", "2", "X(1) Y(1,2) d(1;1,2;1)"]),
    ("hopfPoly", ["nf", "--dim", "1", "1/2 X(1) - 3"]),
    ("hopfPoly", ["nf", "--dim", "1", "X(1) - X(1)"]),
    ("hopfPoly", ["antipode", "--dim", "2", "d(1;1,2;1 2)"]),
    ("hopfPoly", ["antipode", "--dim", "2", "d(1;1,2;1)", "--via", "trees"]),
    ("tensorPoly", ["coproduct", "--dim", "1", "1"]),
    ("tensorPoly", ["coproduct", "--dim", "2", "X(1) d(1;1,2)"]),
    ("tensorPoly", ["coproduct", "--dim", "2", "d(1;1,1;2)", "--via", "trees"]),
    ("methodComparison", ["coproduct", "--dim", "2", "d(2;1,2;1 2)", "--check-agree"]),
    ("methodComparison", ["antipode", "--dim", "2", "d(1;1,2;1 2)", "--check-agree"]),
    ("treeExpansion", ["trees", "--dim", "2", "d(1;1,2;1 2 2)"]),
    ("cutList", ["cuts", "--dim", "2", "t(1;1,2)(1)(2)"]),
    ("cutList", ["cuts", "--dim", "2", "t(1;1,2)(1(2))", "--admissible"]),
    ("verifyReport", ["verify", "geometry", "--dim", "2"]),
    ("verifyReport", ["verify", "trees", "--dim", "1", "--max-tail", "2"]),
]

BAD = [
    [{"coeff": "1.5", "monomial": []}],
    [{"coeff": "1", "monomial": [{"gen": "X", "i": 0}]}],
    [{"coeff": "1", "monomial": [{"gen": "d", "upper": 1, "lower": [1], "tail": []}]}],
    {"suite": "hopf", "items": [], "passed": True, "seconds": 0},
]


def main():
    cm, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    whole = jsonschema.Draft202012Validator(schema)
    failures = 0
    for kind, args in CASES:
        out = subprocess.run([cm, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if out.returncode != 0:
            print(f"FAIL  {label}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(out.stdout)
        part = jsonschema.Draft202012Validator({**schema, "anyOf": [{"$ref": f"#/$defs/{kind}"}]})
        errors = [e.message for e in part.iter_errors(doc)] + [e.message for e in whole.iter_errors(doc)]
        print(("PASS  " if not errors else "FAIL  ") + f"{kind:16} {label}")
        for e in errors[:3]:
            print("      " + e)
        failures += bool(errors)
    for doc in BAD:
        if whole.is_valid(doc):
            print(f"FAIL  schema accepted malformed document {json.dumps(doc)}")
            failures += 1
    print(f"{len(CASES) - failures}/{len(CASES)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
