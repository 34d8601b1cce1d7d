#!/usr/bin/env python3
# Copyright 2026 The genseq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the genseq command line, one per ctest entry."""

import argparse
import filecmp
import json
import pathlib
import subprocess
import sys

import jsonschema


def run(args, genseq):
    return subprocess.run([genseq, *args], capture_output=True, text=True, timeout=300)


def expect(cond, message, proc=None):
    if not cond:
        print("FAIL:", message)
        if proc is not None:
            print("exit", proc.returncode)
            print("stdout:", proc.stdout[-2000:])
            print("stderr:", proc.stderr[-2000:])
        sys.exit(1)


def check_verify_example(o):
    p = run(["verify-example"], o.genseq)
    expect(p.returncode == 0, "verify-example should exit 0", p)
    expect("matches" in p.stdout, "verify-example should report a match", p)


def check_verify_sign_flipped(o):
    golden = o.source / "tests" / "fixtures" / "golden_t8_sign_flipped.json"
    p = run(["verify-example", "--golden", str(golden)], o.genseq)
    expect(p.returncode == 1, "flipped golden should exit 1", p)
    expect("(T8).poly" in p.stderr, "the diff should name the T8 polynomial", p)


def check_determinism(o):
    cfg = o.source / "data" / "worked_example.json"
    a, b = o.work / "det_a.json", o.work / "det_b.json"
    for out in (a, b):
        p = run(["build", "--config", str(cfg), "--out", str(out), "--quiet"], o.genseq)
        expect(p.returncode == 0, "build should succeed", p)
    expect(filecmp.cmp(a, b, shallow=False), "JSON reports differ between runs")
    expect(filecmp.cmp(str(a) + ".txt", str(b) + ".txt", shallow=False), "text reports differ between runs")


def check_schema(o):
    schema = json.loads((o.source / "schema" / "report.schema.json").read_text())
    runs = [
        ["--config", str(o.source / "data" / "worked_example.json")],
        ["--config", str(o.source / "data" / "worked_example.json"), "--max-t-index", "3"],
        ["--config", str(o.source / "tests" / "fixtures" / "second_model.json")],
    ]
    for k, extra in enumerate(runs):
        out = o.work / f"schema_{k}.json"
        p = run(["build", *extra, "--out", str(out), "--quiet"], o.genseq)
        expect(p.returncode == 0, "build should succeed", p)
        jsonschema.validate(json.loads(out.read_text()), schema)


def check_malformed_config(o):
    bad = o.work / "malformed.json"
    text = (o.source / "data" / "worked_example.json").read_text()
    bad.write_text(text.replace('"y^2/x + y^5/x^5 + z\'"', '"y^2/x + * z\'"'))
    p = run(["build", "--config", str(bad)], o.genseq)
    expect(p.returncode == 2, "malformed polynomial should exit 2", p)
    expect("line 11" in p.stderr and "column" in p.stderr, "diagnostic should carry a position", p)
    broken = o.work / "broken.json"
    broken.write_text(text[: len(text) // 2])
    p = run(["build", "--config", str(broken)], o.genseq)
    expect(p.returncode == 2, "truncated JSON should exit 2", p)
    p = run(["build", "--config", str(o.work / "does_not_exist.json")], o.genseq)
    expect(p.returncode == 2, "missing config should exit 2", p)


def check_bad_max_value(o):
    cfg = o.source / "data" / "worked_example.json"
    p = run(["build", "--config", str(cfg), "--max-value", "sqrt(7)"], o.genseq)
    expect(p.returncode == 2, "value outside the basis should exit 2", p)
    expect("--max-value" in p.stderr, "diagnostic should name the option", p)


def check_truncated(o):
    cfg = o.source / "data" / "worked_example.json"
    p = run(["build", "--config", str(cfg), "--max-t-index", "2", "--json"], o.genseq)
    expect(p.returncode == 0, "bounded build should exit 0", p)
    report = json.loads(p.stdout)
    expect(report["t_chain"]["truncated"] is True, "report should be marked truncated")
    expect(report["t_chain"]["stop_reason"] == "max-t-index", "stop reason should be max-t-index")
    expect(len(report["t_chain"]["elements"]) == 2, "two T's expected")
    expect(report["completeness"]["t_chain_truncated"] is True, "completeness should flag truncation")


def check_ideal_zero(o):
    cfg = o.source / "data" / "worked_example.json"
    p = run(["ideal", "--config", str(cfg), "--sigma", "0", "--json"], o.genseq)
    expect(p.returncode == 0, "ideal should exit 0", p)
    gens = json.loads(p.stdout)["generators"]
    expect(len(gens) == 1 and gens[0]["p"] == [] and gens[0]["t"] == [], "sigma 0 gives the unit ideal")
    p = run(["ideal", "--config", str(cfg), "--sigma", "2*sqrt(2)", "--json"], o.genseq)
    expect(p.returncode == 0, "ideal should exit 0", p)
    expect(json.loads(p.stdout)["complete"] is True, "ideal below the processed range should be complete")


def check_ideal_bad_sigma(o):
    cfg = o.source / "data" / "worked_example.json"
    p = run(["ideal", "--config", str(cfg), "--sigma", "2*sqrt("], o.genseq)
    expect(p.returncode == 2, "unparsable sigma should exit 2", p)


def check_usage(o):
    p = run([], o.genseq)
    expect(p.returncode == 2, "missing subcommand should exit 2", p)
    p = run(["build"], o.genseq)
    expect(p.returncode == 2, "missing --config should exit 2", p)
    p = run(["build", "--config", "x", "--max-t-index", "0"], o.genseq)
    expect(p.returncode == 2, "non-positive --max-t-index should exit 2", p)
    p = run(["--help"], o.genseq)
    expect(p.returncode == 0 and "verify-example" in p.stdout, "--help should list subcommands", p)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("check")
    parser.add_argument("--genseq", required=True)
    parser.add_argument("--source", required=True, type=pathlib.Path)
    parser.add_argument("--work", required=True, type=pathlib.Path)
    o = parser.parse_args()
    o.work.mkdir(parents=True, exist_ok=True)
    globals()["check_" + o.check](o)
    print("PASS:", o.check)


if __name__ == "__main__":
    main()
