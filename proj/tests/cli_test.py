# Copyright 2026 The slicckit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""End-to-end checks of the slicckit command-line tool.

Usage: cli_test.py <path-to-slicckit> <source-root>
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = None
ROOT = None


def load_validators():
    schema_dir = ROOT / "schemas"
    resources = []
    schemas = {}
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
        resources.append((doc["$id"], Resource.from_contents(doc)))
        schemas[path.name.removesuffix(".schema.json")] = doc
    registry = Registry().with_resources(resources)
    return {
        name: jsonschema.Draft202012Validator(doc, registry=registry)
        for name, doc in schemas.items()
    }


def run(*args, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("SLICCKIT_SEED", None)
    if env:
        full_env.update(env)
    return subprocess.run(
        [str(BINARY), *args],
        input=stdin,
        capture_output=True,
        text=True,
        env=full_env,
        timeout=300,
    )


def state_text(amplitudes, label=None):
    doc = {"amplitudes": [[float(a), 0.0] for a in amplitudes]}
    if label is not None:
        doc["label"] = label
    return json.dumps(doc)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.v = load_validators()
        cls.samples = ROOT / "samples"

    def ok_json(self, *args, schema, stdin=None):
        proc = run(*args, stdin=stdin)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        doc = json.loads(proc.stdout)
        self.v[schema].validate(doc)
        return doc

    def test_sample_inputs_match_state_schema(self):
        for path in self.samples.glob("*.json"):
            self.v["state"].validate(json.loads(path.read_text()))

    def test_classify_ghz(self):
        doc = self.ok_json("classify", str(self.samples / "ghz.json"),
                           schema="classification")
        self.assertEqual(doc["row"], "2g")
        self.assertEqual(doc["slocc"], "GHZ")
        self.assertAlmostEqual(doc["three_tangle"], 1.0, places=12)
        self.assertEqual(doc["local_ranks"], [2, 2, 2])
        self.assertEqual(doc["label"], "GHZ")

    def test_classify_w(self):
        doc = self.ok_json("classify", str(self.samples / "w.json"),
                           schema="classification")
        self.assertEqual(doc["row"], "3e")
        self.assertEqual(doc["slocc"], "W")
        self.assertEqual(doc["flip"]["mask"], "001")
        self.assertAlmostEqual(doc["three_tangle"], 0.0, places=12)

    def test_classify_from_stdin_and_inline(self):
        text = state_text([1, 0, 0, 0, 0, 0, 0, 1])
        a = self.ok_json("classify", "-", stdin=text, schema="classification")
        b = self.ok_json("classify", text, schema="classification")
        self.assertEqual(a, b)
        self.assertEqual(a["row"], "2g")

    def test_classify_unnormalized_matches_normalized(self):
        a = self.ok_json("classify", state_text([2, 0, 0, 0, 0, 0, 0, 2]),
                         schema="classification")
        b = self.ok_json("classify", str(self.samples / "ghz.json"),
                         schema="classification")
        for x, y in zip(a["normalized"], b["normalized"]):
            self.assertAlmostEqual(x[0], y[0], places=12)
            self.assertAlmostEqual(x[1], y[1], places=12)

    def test_classify_errors(self):
        proc = run("classify", "-", stdin="{not json")
        self.assertEqual(proc.returncode, 2)

        proc = run("classify", "-", stdin=json.dumps({"amplitudes": [[1, 0]] * 7}))
        self.assertEqual(proc.returncode, 2)

        proc = run("classify", "-", stdin=state_text([0] * 8))
        self.assertEqual(proc.returncode, 3)

        proc = run("classify", str(self.samples / "does_not_exist.json"))
        self.assertNotEqual(proc.returncode, 0)

        proc = run("frobnicate")
        self.assertEqual(proc.returncode, 2)

    def test_equiv_slicc_and_licc(self):
        ghz = str(self.samples / "ghz.json")
        scaled = str(self.samples / "ghz_scaled.json")
        doc = self.ok_json("equiv", ghz, scaled, schema="equivalence")
        self.assertTrue(doc["equivalent"])
        self.assertEqual(doc["mode"], "slicc")
        self.assertEqual(doc["family"]["mask"], "000")

        doc = self.ok_json("equiv", "--mode", "licc", ghz, scaled,
                           schema="equivalence")
        self.assertFalse(doc["equivalent"])
        self.assertEqual(doc["reason"], "modulus mismatch")

        doc = self.ok_json("equiv", ghz, str(self.samples / "w.json"),
                           schema="equivalence")
        self.assertFalse(doc["equivalent"])
        self.assertEqual(doc["reason"], "support mismatch")

    def test_equiv_reflexive_with_identity_witness(self):
        w = str(self.samples / "w.json")
        for mode in ("slicc", "licc"):
            doc = self.ok_json("equiv", "--mode", mode, w, w, schema="equivalence")
            self.assertTrue(doc["equivalent"])
            self.assertEqual(doc["family"]["mask"], "000")
            for party in "ABC":
                op = doc["witness"][party]
                self.assertEqual(op["kind"], "diagonal")

    def test_equiv_flipped_family(self):
        # |000>+|011> against |100>+|111>: only an antidiagonal operator on A relates them.
        a = state_text([1, 0, 0, 1, 0, 0, 0, 0])
        b = state_text([0, 0, 0, 0, 1, 0, 0, 1])
        doc = self.ok_json("equiv", a, b, schema="equivalence")
        self.assertTrue(doc["equivalent"])
        self.assertEqual(doc["family"]["mask"], "100")
        self.assertEqual(doc["witness"]["A"]["kind"], "antidiagonal")

    def test_batch(self):
        proc = run("batch", str(self.samples / "batch.jsonl"))
        self.assertEqual(proc.returncode, 0, proc.stderr)
        lines = proc.stdout.splitlines()
        self.assertEqual(len(lines), 3)
        docs = [json.loads(line) for line in lines]
        for doc in docs:
            self.v["batch-line"].validate(doc)
        self.assertEqual([d["row"] for d in docs], ["1", "2g", "3e"])
        self.assertIn("3 states, 0 errors", proc.stderr)

    def test_batch_parallel_is_ordered_and_identical(self):
        serial = run("batch", str(self.samples / "batch.jsonl"))
        parallel = run("batch", "--jobs", "4", str(self.samples / "batch.jsonl"))
        self.assertEqual(serial.stdout, parallel.stdout)

    def test_batch_empty_and_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            empty = pathlib.Path(tmp) / "empty.jsonl"
            empty.write_text("")
            proc = run("batch", str(empty))
            self.assertEqual(proc.returncode, 0)
            self.assertEqual(proc.stdout, "")
            self.assertIn("0 states", proc.stderr)

            mixed = pathlib.Path(tmp) / "mixed.jsonl"
            mixed.write_text("\n".join([
                state_text([1, 0, 0, 0, 0, 0, 0, 1]),
                json.dumps({"amplitudes": [[1, 0]] * 7}),
                "",
                "{broken",
                state_text([0] * 8),
            ]) + "\n")
            proc = run("batch", str(mixed))
            self.assertEqual(proc.returncode, 0, proc.stderr)
            docs = [json.loads(line) for line in proc.stdout.splitlines()]
            self.assertEqual(len(docs), 4)
            for doc in docs:
                self.v["batch-line"].validate(doc)
            self.assertEqual(docs[0]["row"], "2g")
            self.assertEqual(docs[1]["line"], 2)
            self.assertEqual(docs[1]["error"]["code"], "bad_arity")
            self.assertEqual(docs[2]["line"], 4)
            self.assertEqual(docs[2]["error"]["code"], "parse")
            self.assertEqual(docs[3]["line"], 5)
            self.assertIn("4 states, 3 errors", proc.stderr)

            bad = pathlib.Path(tmp) / "bad.jsonl"
            bad.write_text("{broken\n")
            self.assertEqual(run("batch", str(bad)).returncode, 2)

    def test_table_json(self):
        doc = self.ok_json("table", "--format", "json", schema="registry")
        self.assertEqual(len(doc), 45)
        by_id = {row["id"]: row for row in doc}
        self.assertEqual(by_id["2g"]["kernel_conditions"], [])
        self.assertEqual(by_id["2g"]["representative"], "a|000⟩+b|111⟩")
        self.assertTrue(by_id["4k"]["infinite_classes"])
        self.assertEqual(len(by_id["8"]["operator_cases"]), 8)
        self.assertEqual(len(by_id["8"]["kernel_conditions"]), 4)
        self.assertIn("erratum", by_id["6c"])

    def test_table_markdown(self):
        proc = run("table", "--format", "markdown")
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.assertTrue(proc.stdout.startswith("| Row |"))
        rows = [line for line in proc.stdout.splitlines() if line.startswith("| 2g |")]
        self.assertEqual(len(rows), 1)
        self.assertIn("No", rows[0])

    def test_check_suites(self):
        for suite in ("orbit", "ranks"):
            doc = self.ok_json("check", "--suite", suite, "--trials", "500",
                               "--jobs", "2", schema="consistency")
            self.assertEqual(doc["suite"], suite)
            self.assertEqual(doc["trials"], 500)
            self.assertEqual(doc["disagreements"], [])
            self.assertEqual(doc["agreements"], 500)
            self.assertLessEqual(doc["skipped"], 500)

    def test_check_full_orbit_campaign(self):
        doc = self.ok_json("check", "--seed", "1", "--trials", "10000",
                           "--jobs", "2", schema="consistency")
        self.assertEqual(doc["disagreements"], [])

    def test_check_detects_mutated_table(self):
        proc = run("check", "--trials", "3000", "--mutate-table")
        self.assertEqual(proc.returncode, 1)
        doc = json.loads(proc.stdout)
        self.v["consistency"].validate(doc)
        self.assertGreater(len(doc["disagreements"]), 0)

    def test_check_detects_printed_table_defects(self):
        proc = run("check", "--trials", "3000", "--table-source", "printed")
        self.assertEqual(proc.returncode, 1)
        doc = json.loads(proc.stdout)
        self.v["consistency"].validate(doc)
        rows = {d["row"] for d in doc["disagreements"]}
        self.assertTrue(rows)
        self.assertTrue(rows <= {"4e", "4h", "6c", "8"}, rows)
        self.assertIn("6c", rows)

    def test_seed_environment(self):
        def strip(stdout):
            doc = json.loads(stdout)
            doc.pop("elapsed_seconds")
            return doc

        args = ("check", "--trials", "2000", "--mutate-table")
        default = strip(run(*args).stdout)
        env7 = strip(run(*args, env={"SLICCKIT_SEED": "7"}).stdout)
        flag7 = strip(run(*args, "--seed", "7").stdout)
        both = strip(run(*args, "--seed", "7", env={"SLICCKIT_SEED": "9"}).stdout)
        self.assertEqual(default["seed"], 1)
        self.assertEqual(env7["seed"], 7)
        self.assertEqual(env7, flag7)
        self.assertEqual(both, flag7)
        self.assertNotEqual(default["disagreements"], env7["disagreements"])

    def test_outputs_are_byte_identical(self):
        cases = [
            ("classify", str(self.samples / "w.json")),
            ("equiv", str(self.samples / "ghz.json"), str(self.samples / "ghz_scaled.json")),
            ("batch", str(self.samples / "batch.jsonl")),
            ("table", "--format", "markdown"),
            ("table", "--format", "json"),
        ]
        for args in cases:
            self.assertEqual(run(*args).stdout, run(*args).stdout, args)


if __name__ == "__main__":
    BINARY = pathlib.Path(sys.argv[1]).resolve()
    ROOT = pathlib.Path(sys.argv[2]).resolve()
    unittest.main(argv=[sys.argv[0], "-v"])
