"""Run the CLI over a spread of commands and validate every JSON document
against the shipped schema, both as the specific document kind and as the
top-level union."""
import json
import shlex
import subprocess
import sys

import jsonschema

CLI, SCHEMA = sys.argv[1], sys.argv[2]

CASES = [
    ("classify_document", 0, "classify --genus 2 --curve-type I --circles 3 --degree 1"),
    ("classify_document", 0, "classify --genus 3 --curve-type 0 --degree 2 --rank 3"),
    ("strata_document", 0, "strata --genus 3 --degree 1"),
    ("strata_document", 0, "strata --genus 4 --degree 1 --curve-type I --circles 1 --w1 1"),
    ("strata_document", 0, "strata --genus 3 --degree 2 --curve-type 0"),
    ("report", 0, "bg --genus 2 --curve-type I --circles 3 --w1 111 --degree 1 --char 3"),
    ("report", 0, "bg --genus 3 --curve-type I --circles 2 --w1 00 --degree 0 --truncate 12"),
    ("report", 0, "bg --genus 3 --curve-type I --circles 2 --degree 2 --quaternionic"),
    ("moduli_document", 0, "moduli --genus 2 --curve-type II --circles 1 --w1 1 --degree 1"),
    ("moduli_document", 0, "moduli --genus 4 --curve-type I --circles 1 --w1 1 --degree 1"),
    ("verify_document", 0, "verify --genus 3 --curve-type II --circles 1 --w1 1 --degree 1"),
    ("verify_document", 0, "verify --genus 2 --curve-type I --circles 1 --w1 1 --degree 1 --char 3"),
    ("atlas_document", 0, "atlas --genus 1..3 --degree 1"),
    ("atlas_document", 0, "atlas --genus 2 --degree 2 --threads 2"),
    ("atlas_document", 0, "atlas --genus ''"),
    ("error_document", 2, "bg --genus 2 --curve-type I --circles 1 --w1 1 --char 2"),
    ("error_document", 2, "moduli --genus 2 --curve-type II --circles 1 --w1 1 --degree 2"),
    ("error_document", 2, "atlas --genus 0..13"),
    ("error_document", 2, "classify --genus 2 --nonsense"),
]

with open(SCHEMA) as fh:
    schema = json.load(fh)
jsonschema.Draft202012Validator.check_schema(schema)
top = jsonschema.Draft202012Validator(schema)

failures = 0
for kind, expected_exit, command in CASES:
    proc = subprocess.run([CLI] + shlex.split(command), capture_output=True, text=True)
    try:
        if proc.returncode != expected_exit:
            raise AssertionError(f"exit {proc.returncode}, expected {expected_exit}")
        doc = json.loads(proc.stdout)
        specific = jsonschema.Draft202012Validator({**schema, "$ref": f"#/$defs/{kind}"})
        specific.validate(doc)
        top.validate(doc)
        print(f"ok   {kind:18} {command}")
    except Exception as exc:  # report and keep going
        failures += 1
        print(f"FAIL {kind:18} {command}: {exc}")

sys.exit(1 if failures else 0)
