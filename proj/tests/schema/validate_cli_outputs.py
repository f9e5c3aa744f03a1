#!/usr/bin/env python3
# Copyright 2026 The MEAF Authors.
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
"""Runs every meaf subcommand with --format json and validates the output."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing


def load_registry(schema_dir):
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        contents = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(contents)
        schemas[path.name] = contents
        resources.append((contents["$id"],
                          referencing.Resource.from_contents(contents)))
    return schemas, referencing.Registry().with_resources(resources)


class Checker:

    def __init__(self, meaf, schemas, registry):
        self.meaf = meaf
        self.schemas = schemas
        self.registry = registry
        self.checked = 0

    def validate(self, value, schema_name, pointer=None):
        schema = self.schemas[schema_name]
        if pointer is not None:
            schema = {"$ref": schema["$id"] + "#/$defs/" + pointer}
        jsonschema.Draft202012Validator(
            schema, registry=self.registry).validate(value)
        self.checked += 1

    def run(self, *args, expect=0):
        proc = subprocess.run([self.meaf, "--format", "json", *args],
                              capture_output=True, text=True, check=False)
        if proc.returncode != expect:
            sys.exit(f"meaf {' '.join(args)} exited {proc.returncode}, "
                     f"expected {expect}\n{proc.stderr}")
        return json.loads(proc.stdout)

    def file(self, path, schema_name):
        self.validate(json.loads(pathlib.Path(path).read_text()), schema_name)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--meaf", required=True)
    parser.add_argument("--schemas", required=True, type=pathlib.Path)
    parser.add_argument("--examples", required=True, type=pathlib.Path)
    args = parser.parse_args()

    schemas, registry = load_registry(args.schemas)
    c = Checker(args.meaf, schemas, registry)
    ex = args.examples

    for config in ("gen_small.json", "market_shares.json"):
        c.file(ex / config, "gen_config.schema.json")
    c.file(ex / "bench_small.json", "bench_config.schema.json")
    c.file(ex / "tiny_instance.json", "instance.schema.json")

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        inst = tmp / "inst.json"
        c.validate(c.run("--out", str(inst), "generate",
                         str(ex / "gen_small.json")),
                   "cli_summaries.schema.json", "generate")
        c.file(inst, "instance.schema.json")

        for algo in ("exact", "lp", "carl-asc", "carl-desc", "dtas"):
            out = tmp / f"{algo}.json"
            c.validate(c.run("--out", str(out), "solve", str(inst), "--algo",
                             algo), "solve_result.schema.json")
            c.file(out, "solve_result.schema.json")
        c.validate(c.run("solve", str(inst), "--algo", "exact", "--budget",
                         "0", expect=4), "solve_result.schema.json")

        bench_dir = tmp / "bench"
        c.validate(c.run("--out", str(bench_dir), "bench",
                         str(ex / "bench_small.json")),
                   "bench_records.schema.json")
        c.file(bench_dir / "records.json", "bench_records.schema.json")
        c.file(bench_dir / "manifest.json", "manifest.schema.json")

        for algo, schema, name in (("dtas", "bench_records.schema.json",
                                    "sweep.json"),
                                   ("tail-drop", "tail_drop.schema.json",
                                    "tail_drop.json")):
            sweep_dir = tmp / f"sweep-{algo}"
            c.validate(c.run("--out", str(sweep_dir), "sweep", str(inst),
                             "--algo", algo, "--alphas", "0.4,0.5,0.7"),
                       schema)
            c.file(sweep_dir / name, schema)
            c.file(sweep_dir / "manifest.json", "manifest.schema.json")

        reduce_dir = tmp / "reduce"
        for items in ("5,5,5,5,5,5", "6,6,6,6,6,7,7,7,9"):
            c.validate(c.run("--out", str(reduce_dir), "reduce3p", "--items",
                             items), "cli_summaries.schema.json", "reduce3p")
            c.file(reduce_dir / "instance.json", "instance.schema.json")
            c.file(reduce_dir / "result.json", "solve_result.schema.json")

        milp_dir = tmp / "milp"
        c.validate(c.run("--out", str(milp_dir), "export-milp", str(inst)),
                   "cli_summaries.schema.json", "export_milp")
        c.file(milp_dir / "manifest.json", "manifest.schema.json")

    print(f"{c.checked} JSON documents valid")


if __name__ == "__main__":
    main()
