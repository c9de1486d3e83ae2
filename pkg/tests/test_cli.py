import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

import vattol as vt

F = Fraction


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "vattol.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        timeout=300,
    )


class TestGen:
    def test_writes_file_and_stats(self, tmp_path):
        out = tmp_path / "c6.edges"
        proc = run_cli("gen", "cycle:6", "-o", str(out))
        assert proc.returncode == 0
        assert "n=6 m=6 d=2" in proc.stderr
        edges = [l for l in out.read_text().splitlines() if not l.startswith("#")]
        assert len(edges) == 6

    def test_random_reproducible(self, tmp_path):
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        assert run_cli("gen", "random_regular:20,3,seed=42", "-o", str(a)).returncode == 0
        assert run_cli("gen", "random_regular:20,3,seed=42", "-o", str(b)).returncode == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_parameter_exit_2(self):
        proc = run_cli("gen", "cycle:2")
        assert proc.returncode == 2
        assert "error:" in proc.stderr


class TestMetrics:
    def test_star_json(self):
        proc = run_cli("metrics", "star:5", "--vat", "--conductance")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["vat"] == {"num": 1, "den": 5, "real": 0.2, "witness": [0]}
        assert record["conductance"]["num"] == 1
        assert record["conductance"]["den"] == 1

    def test_file_round_trip_matches_memory(self, tmp_path):
        out = tmp_path / "c6.edges"
        run_cli("gen", "cycle:6", "-o", str(out))
        proc = run_cli(
            "metrics", str(out), "--vat", "--conductance", "--lambda2"
        )
        record = json.loads(proc.stdout)
        assert F(record["vat"]["num"], record["vat"]["den"]) == F(2, 3)
        assert F(record["conductance"]["num"], record["conductance"]["den"]) == F(1, 3)
        assert record["lambda2"]["real"] == pytest.approx(0.5, abs=1e-9)
        g = vt.cycle(6)
        assert record["vat"]["witness"] == vt.vat_exact(g).witness_vertices

    def test_disconnected_rejected_without_flag(self, tmp_path):
        path = tmp_path / "two.edges"
        path.write_text("0 1\n2 3\n")
        proc = run_cli("metrics", str(path), "--vat")
        assert proc.returncode == 2
        proc = run_cli("metrics", str(path), "--vat", "--restrict-lcc")
        assert proc.returncode == 0
        record = json.loads(proc.stdout)
        assert record["restricted_to_largest_component"] is True
        assert record["n"] == 2

    def test_csv_matches_json_values(self, tmp_path):
        js = run_cli("metrics", "cycle:6", "--vat", "--conductance")
        cs = run_cli("metrics", "cycle:6", "--vat", "--conductance", "--format", "csv")
        record = json.loads(js.stdout)
        rows = {r["metric"]: r for r in csv.DictReader(cs.stdout.splitlines())}
        for metric in ("vat", "conductance"):
            assert int(rows[metric]["num"]) == record[metric]["num"]
            assert int(rows[metric]["den"]) == record[metric]["den"]
            assert float(rows[metric]["real"]) == record[metric]["real"]
            assert rows[metric]["witness"] == " ".join(
                map(str, record[metric]["witness"])
            )

    def test_weighted_and_alpha_beta(self):
        proc = run_cli("metrics", "star:5", "--weighted", "--alpha-beta", "2,0")
        record = json.loads(proc.stdout)
        assert record["weighted_vat"]["num"] == 1
        assert record["alpha_beta_vat"] == {
            "num": 2,
            "den": 5,
            "real": 0.4,
            "witness": [0],
            "parameters": "alpha=2 beta=0",
        }


class TestVerify:
    def test_cycles_all_hold(self, tmp_path):
        out = tmp_path / "r.csv"
        proc = run_cli(
            "verify", "--family", "cycle", "--n", "3..12", "--checks", "all",
            "-o", str(out),
        )
        assert proc.returncode == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len({r["graph_id"] for r in rows}) == 10
        assert all(r["holds"] in ("true", "") for r in rows)

    def test_exhaustive_selection(self, tmp_path):
        out = tmp_path / "r.csv"
        proc = run_cli(
            "verify", "--exhaustive", "6", "2", "--checks", "vat_lower",
            "-o", str(out),
        )
        assert proc.returncode == 0
        rows = list(csv.DictReader(out.read_text().splitlines()))
        assert len(rows) == 60
        assert all(r["holds"] == "true" for r in rows)

    def test_k2_equality_reported(self):
        proc = run_cli(
            "verify", "--family", "complete", "--n", "2..2",
            "--checks", "vat_lower", "-o", "/dev/null",
        )
        assert proc.returncode == 0
        assert "equality cases for vat_lower: complete:2" in proc.stderr

    def test_json_csv_identical_values(self, tmp_path):
        args = ["verify", "--family", "cycle", "--n", "3..8", "--checks", "all"]
        cpath, jpath = tmp_path / "r.csv", tmp_path / "r.json"
        assert run_cli(*args, "--format", "csv", "-o", str(cpath)).returncode == 0
        assert run_cli(*args, "--format", "json", "-o", str(jpath)).returncode == 0
        crows = list(csv.DictReader(cpath.read_text().splitlines()))
        jrows = json.loads(jpath.read_text())
        assert len(crows) == len(jrows)
        for c, j in zip(crows, jrows):
            assert c["graph_id"] == j["graph_id"]
            assert c["theorem"] == j["theorem"]
            assert int(c["n"]) == j["n"] and int(c["m"]) == j["m"]
            for side in ("lhs", "rhs"):
                if j[side] is None:
                    assert c[f"{side}_num"] == "" and c[f"{side}_real"] == ""
                    continue
                if "num" in j[side]:
                    assert int(c[f"{side}_num"]) == j[side]["num"]
                    assert int(c[f"{side}_den"]) == j[side]["den"]
                assert float(c[f"{side}_real"]) == j[side]["real"]
            holds = {"true": True, "false": False, "": None}[c["holds"]]
            assert holds == j["holds"]

    def test_spec_selection(self):
        proc = run_cli(
            "verify", "--spec", "circulant:8,1+4", "--checks", "cheeger",
            "-o", "/dev/null",
        )
        assert proc.returncode == 0

    def test_empty_selection_exit_2(self):
        proc = run_cli("verify", "--checks", "all")
        assert proc.returncode == 2

    def test_unknown_check_exit_2(self):
        proc = run_cli("verify", "--family", "cycle", "--n", "3..4", "--checks", "bogus")
        assert proc.returncode == 2

    def test_malformed_file_exit_2(self, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("0 zero\n")
        proc = run_cli("verify", "--files", str(bad))
        assert proc.returncode == 2
        assert "Traceback" not in proc.stderr


class TestCorpus:
    def test_deterministic_rerun(self, tmp_path):
        d1, d2 = tmp_path / "c1", tmp_path / "c2"
        assert run_cli("corpus", "-o", str(d1)).returncode == 0
        assert run_cli("corpus", "-o", str(d2)).returncode == 0
        files1 = sorted(p.name for p in d1.iterdir())
        files2 = sorted(p.name for p in d2.iterdir())
        assert files1 == files2
        for name in files1:
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_manifest_lists_every_graph(self, tmp_path):
        d = tmp_path / "c"
        assert run_cli("corpus", "-o", str(d)).returncode == 0
        rows = list(csv.DictReader((d / "manifest.csv").read_text().splitlines()))
        assert len(rows) == len(vt.standard_corpus())
        for row in rows[:5]:
            g = vt.read_edge_list_path(str(d / row["file"]))
            assert g.n == int(row["n"]) and g.m == int(row["m"])

    def test_unwritable_dir_exit_2(self):
        proc = run_cli("corpus", "-o", "/proc/nope/corpus")
        assert proc.returncode == 2
