import csv
import io
import json
import os

import pytest
from click.testing import CliRunner

from sasakinv import verify as verify_mod
from sasakinv.cli import main

K3_RECORD = os.path.join(os.path.dirname(__file__), "data", "k3.json")


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


class TestCi:
    def test_wall_row(self, runner):
        result = run(
            runner, "ci", "--ambient", "9", "--degrees", "70,16,16,14,7,6",
            "--wall", "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["d"] == "10536960"
        assert data["m"] == "-5683"
        assert data["e"] == "-7767425433600"
        assert data["k"] == "-119"

    def test_quintic_hodge(self, runner):
        result = run(
            runner, "ci", "--ambient", "4", "--degrees", "5", "--hodge",
            "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["h03"] == "1"
        assert data["h12"] == "101"

    def test_empty_degrees(self, runner):
        result = run(
            runner, "ci", "--ambient", "3", "--degrees", "", "--wall",
            "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert (data["d"], data["k"], data["m"], data["e"]) == ("1", "4", "4", "4")

    def test_multifactor_chern(self, runner):
        result = run(
            runner, "ci", "--ambient", "1,3", "--degrees", "2,5;1,1",
            "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["dim"] == "2"
        assert data["c1sq"] == "48"
        assert data["c2"] == "156"

    def test_csv_mirrors_table_order(self, runner):
        result = run(
            runner, "ci", "--ambient", "9", "--degrees", "70,16,16,14,7,6",
            "--wall", "--format", "csv",
        )
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ["degrees", "d", "p1", "chi", "c1"]
        assert rows[1] == [
            "70,16,16,14,7,6", "10536960", "-5683", "-7767425433600", "-119",
        ]

    def test_malformed_degrees_is_usage_error(self, runner):
        result = run(runner, "ci", "--ambient", "4", "--degrees", "5,x")
        assert result.exit_code == 2

    def test_domain_error_exit_code(self, runner):
        # dimension 2 spec cannot produce Wall data
        result = run(runner, "ci", "--ambient", "4", "--degrees", "5,2", "--wall")
        assert result.exit_code == 3
        assert result.stderr.startswith("error:")


class TestTupleSearch:
    def test_reference_rows(self, runner):
        result = run(
            runner, "tuple-search", "-k", "5", "--q", "2,3,4,6,8",
            "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["n"] == "21740924188"
        assert [row["p"] for row in data["rows"]] == [
            "869636968", "339701941", "179677060", "75228112", "41098156",
        ]
        assert [row["d_c1"] for row in data["rows"]] == ["1", "1", "1", "5", "1"]
        assert all(row["c2"] == data["c2"] for row in data["rows"])

    def test_single_q(self, runner):
        result = run(runner, "tuple-search", "-k", "1", "--q", "2", "--format", "json")
        data = json.loads(result.output)
        assert data["n"] == "13"
        assert data["rows"][0]["c1sq"] == "-27"

    def test_greedy(self, runner):
        result = run(runner, "tuple-search", "-k", "2", "--format", "json")
        assert result.exit_code == 0
        assert len(json.loads(result.output)["rows"]) == 6

    def test_bad_q_list(self, runner):
        assert run(runner, "tuple-search", "-k", "1", "--q", "2,x").exit_code == 2
        assert run(runner, "tuple-search", "-k", "1", "--q", "3,5").exit_code == 3

    def test_csv(self, runner):
        result = run(
            runner, "tuple-search", "-k", "5", "--q", "2,3,4,6,8", "--format", "csv",
        )
        rows = list(csv.reader(io.StringIO(result.output)))
        assert rows[0] == ["q", "p", "c1sq", "d_c1"]
        assert rows[1] == ["2", "869636968", "39133663488", "1"]


class TestFamilies:
    def test_horikawa(self, runner):
        result = run(runner, "horikawa", "--i", "2", "--format", "json")
        data = json.loads(result.output)
        assert (data["c1sq"], data["c2"], data["chiO"]) == ("8", "76", "7")
        assert data["spin"] is False
        assert data["spin_witness"] == "3"

    def test_theorem_c_even(self, runner):
        result = run(runner, "theorem-c", "--k", "2", "--format", "json")
        data = json.loads(result.output)
        assert data["contact_obstruction"] == "inequivalent"
        assert data["hodge_differ"] is True
        assert data["sphere_bundle_summands"] == "233"

    def test_theorem_c_odd(self, runner):
        data = json.loads(
            run(runner, "theorem-c", "--k", "1", "--format", "json").output
        )
        assert data["contact_obstruction"] == "inconclusive"

    def test_nonspin_tuple(self, runner):
        result = run(runner, "nonspin-tuple", "-k", "2", "--format", "json")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data) == 2
        for entry in data:
            assert entry["report"]["manifold"]["spin"] is False
            assert "~x" in entry["report"]["label"]

    def test_nonspin_bad_euler(self, runner):
        assert run(runner, "nonspin-tuple", "-k", "1", "--euler", "2,2").exit_code == 3


class TestBwClassify:
    def test_k3(self, runner):
        result = run(
            runner, "bw", "classify", "--from-file", K3_RECORD, "--format", "json",
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["label"] == "#21(S^2 x S^3)"
        assert data["manifold"] == {"n": "21", "spin": True}
        assert data["contact_c1_zero"] is True

    def test_bad_record(self, runner, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{}")
        assert run(runner, "bw", "classify", "--from-file", str(path)).exit_code == 2

    def test_imprimitive_euler(self, runner, tmp_path):
        record = json.loads(open(K3_RECORD).read())
        record["euler_class"] = ["2", "0"]
        path = tmp_path / "imprimitive.json"
        path.write_text(json.dumps(record))
        assert run(runner, "bw", "classify", "--from-file", str(path)).exit_code == 3


class TestLinkSign:
    def test_positive(self, runner):
        result = run(
            runner, "link-sign", "--weights", "1,1,1,21", "--degree", "22",
            "--format", "json",
        )
        assert json.loads(result.output)["sign"] == "positive"

    def test_null_and_negative(self, runner):
        out = run(
            runner, "link-sign", "--weights", "1,1,1,1", "--degree", "4",
            "--format", "json",
        )
        assert json.loads(out.output)["sign"] == "null"
        out = run(
            runner, "link-sign", "--weights", "1,1,1,1", "--degree", "5",
            "--format", "json",
        )
        assert json.loads(out.output)["sign"] == "negative"


class TestPairSearch:
    def test_small_bounds_json(self, runner):
        result = run(runner, "pair-search", "--max-r", "2", "--max-degree", "6")
        assert result.exit_code == 0
        assert json.loads(result.output) == []

    def test_spill_and_jobs(self, runner, tmp_path):
        result = run(
            runner, "pair-search", "--max-r", "2", "--max-degree", "8",
            "--jobs", "2", "--memory-budget", "5",
            "--spill-dir", str(tmp_path),
        )
        assert result.exit_code == 0


class TestVerify:
    def test_clean(self, runner):
        result = run(runner, "verify", "--kmax", "10")
        assert result.exit_code == 0
        assert "surface tuple: ok" in result.output
        assert result.stderr == ""

    def test_full_run_is_fast(self, runner):
        import time

        start = time.perf_counter()
        result = run(runner, "verify")
        assert result.exit_code == 0
        assert time.perf_counter() - start < 10.0

    def test_seed_tables(self, runner):
        result = run(runner, "verify", "--seed-tables")
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["surface_tuple"]["n"] == "21740924188"
        assert len(data["known_wall_rows"]) == 6

    def test_tampered_fixture_exits_one(self, runner, monkeypatch):
        monkeypatch.setattr(verify_mod, "SURFACE_TUPLE_N", 21740924189)
        result = run(runner, "verify", "--kmax", "2")
        assert result.exit_code == 1
        assert "MISMATCH" in result.output
