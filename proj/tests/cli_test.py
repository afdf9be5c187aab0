"""End-to-end checks of the command-line tool against networkx as an independent GED oracle."""

import argparse
import csv
import io
import json
import random
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema
import networkx as nx

ARGS = None


def run(*argv, expect=0):
    proc = subprocess.run([ARGS.cli, *map(str, argv)], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect:
        raise AssertionError(f"exit {proc.returncode} (wanted {expect}) for {argv}\n{proc.stdout}\n{proc.stderr}")
    return proc.stdout


def random_graph(rng, name, max_nodes=5):
    n = rng.randint(1, max_nodes)
    nodes = [{"id": i, "label": rng.choice("AB")} for i in range(n)]
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(slots)
    edges = [{"u": u, "v": v, "label": rng.choice("ab")} for u, v in slots[: rng.randint(0, len(slots))]]
    return {"name": name, "nodes": nodes, "edges": edges}


def to_nx(doc):
    g = nx.Graph()
    for node in doc["nodes"]:
        g.add_node(node["id"], label=node["label"])
    for e in doc["edges"]:
        g.add_edge(e["u"], e["v"], label=e["label"])
    return g


def unit_ged(a, b):
    differ = lambda x, y: 0 if x["label"] == y["label"] else 1
    one = lambda _: 1
    return nx.graph_edit_distance(to_nx(a), to_nx(b), node_subst_cost=differ, node_del_cost=one, node_ins_cost=one,
                                  edge_subst_cost=differ, edge_del_cost=one, edge_ins_cost=one)


def write_dataset(root, docs, cost_model="unit"):
    root.mkdir(parents=True, exist_ok=True)
    for d in docs:
        (root / f"{d['name']}.json").write_text(json.dumps(d))
    manifest = {"cost_model": cost_model, "graphs": [{"id": d["name"], "file": f"{d['name']}.json"} for d in docs]}
    (root / "manifest.json").write_text(json.dumps(manifest))


class Ged(unittest.TestCase):
    def test_worked_example(self):
        g, h = ARGS.data / "worked_g.json", ARGS.data / "worked_h.json"
        out = json.loads(run("ged", g, h))
        self.assertEqual(out["status"], "optimal")
        self.assertEqual(out["ged"], 5)
        self.assertEqual(sum(op["cost"] for op in out["edit_path"]), 5)
        self.assertEqual(json.loads(run("ged", g, h, "--oracle"))["ged"], 5)

    def test_matches_networkx(self):
        rng = random.Random(11)
        with tempfile.TemporaryDirectory() as tmp:
            for k in range(12):
                a, b = random_graph(rng, "a"), random_graph(rng, "b")
                pa, pb = Path(tmp) / "a.json", Path(tmp) / "b.json"
                pa.write_text(json.dumps(a))
                pb.write_text(json.dumps(b))
                ours = json.loads(run("ged", pa, pb, "--seed", k))
                self.assertEqual(ours["ged"], unit_ged(a, b), f"pair {k}")
                self.assertAlmostEqual(sum(op["cost"] for op in ours["edit_path"]), ours["ged"])

    def test_dump_lp(self):
        with tempfile.TemporaryDirectory() as tmp:
            lp = Path(tmp) / "m.lp"
            run("ged", ARGS.data / "worked_g.json", ARGS.data / "worked_h.json", "--dump-lp", lp)
            text = lp.read_text()
            self.assertTrue(text.splitlines()[1].startswith("Minimize"))
            self.assertIn("Subject To", text)
            self.assertTrue(text.rstrip().endswith("End"))


class Bound(unittest.TestCase):
    def test_hierarchy_on_worked_example(self):
        g, h = ARGS.data / "worked_g.json", ARGS.data / "worked_h.json"
        values = {alg: json.loads(run("bound", g, h, "--alg", alg, "--exact"))["value"] for alg in ("ls", "bm", "forilp")}
        self.assertEqual(values, {"ls": 2, "bm": 5, "forilp": 5})

    def test_certificate_closes(self):
        out = json.loads(run("bound", ARGS.data / "worked_g.json", ARGS.data / "worked_h.json", "--exact"))
        cert = out["certificate"]
        self.assertTrue(cert["exact"])
        self.assertAlmostEqual(cert["primal_objective"], cert["dual_objective"], places=9)

    def test_gxl_self_distance_is_zero(self):
        sample = ARGS.data / "aids_sample.gxl"
        for alg in ("bm", "forilp"):
            self.assertEqual(json.loads(run("bound", sample, sample, "--costs", "aids-muta", "--alg", alg))["value"], 0)

    def test_ls_rejected_under_molecule_costs(self):
        sample = ARGS.data / "aids_sample.gxl"
        run("bound", sample, sample, "--costs", "aids-muta", "--alg", "ls", expect=2)


class Search(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        rng = random.Random(5)
        cls.tmp = tempfile.TemporaryDirectory()
        cls.root = Path(cls.tmp.name)
        cls.docs = [random_graph(rng, f"g{i:02d}") for i in range(12)]
        write_dataset(cls.root / "ds", cls.docs)
        cls.query = random_graph(rng, "query")
        cls.query_path = cls.root / "query.json"
        cls.query_path.write_text(json.dumps(cls.query))
        cls.ged = {d["name"]: unit_ged(cls.query, d) for d in cls.docs}
        cls.schema = json.loads(ARGS.schema.read_text())

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def search(self, *extra, expect=0):
        return run("search", "--query", self.query_path, "--dataset", self.root / "ds", *extra, expect=expect)

    def test_accepted_matches_oracle(self):
        for tau in range(0, 7):
            report = json.loads(self.search("--tau", tau, "--jobs", 2))
            jsonschema.validate(report, self.schema)
            expected = sorted(name for name, d in self.ged.items() if d <= tau)
            self.assertEqual(sorted(report["accepted"]), expected, f"tau {tau}")
            self.assertEqual(report["coverage"], 1)

    def test_seed_makes_output_byte_stable(self):
        first = self.search("--tau", 3, "--seed", 9, "--jobs", 1)
        self.assertEqual(first, self.search("--tau", 3, "--seed", 9, "--jobs", 3))
        self.assertEqual(self.search("--tau", 3, "--seed", 9, "--csv"), self.search("--tau", 3, "--seed", 9, "--csv"))

    def test_csv_layout(self):
        rows = list(csv.reader(io.StringIO(self.search("--tau", 2, "--csv"))))
        self.assertEqual(rows[0], ["graph_id", "stage_reached", "ls", "bm", "forilp", "verdict", "elapsed_ms"])
        self.assertEqual([r[0] for r in rows[1:]], [d["name"] for d in self.docs])

    def test_exhausted_budget_exits_3(self):
        report = json.loads(self.search("--tau", 6, "--node-limit", 0, expect=3))
        jsonschema.validate(report, self.schema)
        self.assertTrue(report["aborted"])
        self.assertLess(report["coverage"], 1)

    def test_tau_options_are_exclusive(self):
        self.search("--tau", 1, "--tau-mult", 1, expect=1)
        self.search(expect=1)


class Bench(unittest.TestCase):
    def test_dataset_rows(self):
        rng = random.Random(8)
        with tempfile.TemporaryDirectory() as tmp:
            docs = [random_graph(rng, f"h{i}") for i in range(10)]
            write_dataset(Path(tmp), docs)
            out = run("bench", "--dataset", tmp, "--taus", "1,2,3", "--query-count", 2, "--seed", 1)
            rows = list(csv.DictReader(io.StringIO(out)))
            self.assertEqual(len(rows), 6)
            for q in ("h0", "h1"):
                matches = [float(r["matches"]) for r in rows if r["query"] == q]
                self.assertEqual(len(matches), 3)
                self.assertEqual(matches, sorted(matches))
            for r in rows:
                for kind in ("mean", "max"):
                    ls, bm, fori = (float(r[f"{kind}_gap_{a}"]) for a in ("ls", "bm", "forilp"))
                    self.assertGreaterEqual(ls + 1e-9, bm)
                    self.assertGreaterEqual(bm + 1e-9, fori)
            self.assertEqual(out, run("bench", "--dataset", tmp, "--taus", "1,2,3", "--query-count", 2, "--seed", 1))

    def test_star_cycle_table(self):
        rows = list(csv.DictReader(io.StringIO(run("bench", "--preset", "star-cycle"))))
        self.assertEqual([int(r["n"]) for r in rows], list(range(3, 13)))
        for r in rows:
            n = int(r["n"])
            self.assertEqual(float(r["forilp"]), 2 * n - 5)
            self.assertEqual(float(r["ged"]), 2 * n - 5)
            self.assertEqual(float(r["bm"]), n - 2)


class Misc(unittest.TestCase):
    def test_selftest(self):
        out = run("selftest")
        self.assertNotIn("FAIL", out)

    def test_usage_and_data_errors(self):
        run(expect=1)
        run("bound", "--alg", "nope", "x", "y", expect=1)
        run("ged", "missing_a.json", "missing_b.json", expect=2)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", type=Path, required=True)
    parser.add_argument("--data", type=Path, required=True)
    ARGS, rest = parser.parse_known_args()
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)
