"""CLI behavior: commands, formats, exit codes."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from rightangles.cli import main

FREE_LINE = {"field": {"p": 3, "k": 1, "modulus": [0, 1]}, "n": 1,
             "points": [[0], [1], [2]]}
CORNER = {"field": {"p": 3, "k": 1, "modulus": [0, 1]}, "n": 2,
          "points": [[0, 0], [1, 0], [0, 1]]}


@pytest.fixture
def runner():
    return CliRunner()


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(path)


class TestBounds:
    def test_text_upper_column(self, runner):
        res = runner.invoke(main, ["bounds", "--q", "3", "--n", "3"])
        assert res.exit_code == 0
        values = [line.split()[2] for line in res.output.strip().splitlines()[1:]]
        assert values == ["9", "13", "18"]

    def test_lower_column(self, runner):
        res = runner.invoke(main, ["bounds", "--q", "3", "--n", "4"])
        last = res.output.strip().splitlines()[-1].split()
        assert last[0] == "4" and last[1] == "6"

    def test_even_q_marks_upper_na(self, runner):
        res = runner.invoke(main, ["bounds", "--q", "2", "--n", "3"])
        assert res.exit_code == 0
        assert "n/a" in res.output

    def test_csv_columns(self, runner):
        res = runner.invoke(main, ["bounds", "--q", "3", "--n", "2", "--format", "csv"])
        rows = list(csv.reader(io.StringIO(res.output)))
        assert rows[0] == ["n", "lower_construction", "upper_bound", "exact", "status"]
        assert rows[1][0] == "1" and rows[1][3] == "3" and rows[1][4] == "exact"

    def test_bad_q_is_usage_error(self, runner):
        res = runner.invoke(main, ["bounds", "--q", "6", "--n", "3"])
        assert res.exit_code == 2


class TestVerify:
    def test_free_file_exits_zero(self, runner, tmp_path):
        res = runner.invoke(main, ["verify", write(tmp_path, "a.json", FREE_LINE)])
        assert res.exit_code == 0
        assert json.loads(res.output)["free"] is True

    def test_witness_exits_one(self, runner, tmp_path):
        res = runner.invoke(main, ["verify", write(tmp_path, "a.json", CORNER)])
        assert res.exit_code == 1
        payload = json.loads(res.output)
        assert payload["witness"]["vertex"] == [0, 0]

    def test_malformed_exits_two(self, runner, tmp_path):
        res = runner.invoke(main, ["verify", write(tmp_path, "a.json", "{oops")])
        assert res.exit_code == 2


class TestCertify:
    def test_free_input_certified(self, runner, tmp_path):
        res = runner.invoke(main, ["certify", write(tmp_path, "a.json", FREE_LINE),
                                   "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["certified"] is True
        assert payload["tensor_disagreement"] is None
        assert payload["rank_floor"] <= payload["slice_count"] <= payload["slice_count_bound"]

    def test_right_angle_input_skips_certificate(self, runner, tmp_path):
        res = runner.invoke(main, ["certify", write(tmp_path, "a.json", CORNER),
                                   "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["free"] is False and payload["certified"] is False
        assert payload["tensor_disagreement"]["cell"] == [0, 1, 2]

    def test_even_characteristic_is_usage_error(self, runner, tmp_path):
        f2 = {"field": {"p": 2, "k": 1, "modulus": [0, 1]}, "n": 1,
              "points": [[0], [1]]}
        res = runner.invoke(main, ["certify", write(tmp_path, "a.json", f2)])
        assert res.exit_code == 2


class TestConstruct:
    def test_layer_with_verdict(self, runner):
        res = runner.invoke(main, ["construct", "--q", "3", "--n", "4",
                                   "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["size"] == 6
        assert payload["free"] is False and payload["witness"] is not None

    def test_small_layer_is_free(self, runner):
        res = runner.invoke(main, ["construct", "--q", "3", "--n", "3",
                                   "--format", "json"])
        payload = json.loads(res.output)
        assert payload["size"] == 3 and payload["free"] is True

    def test_dimension_too_small(self, runner):
        res = runner.invoke(main, ["construct", "--q", "5", "--n", "2"])
        assert res.exit_code == 2


class TestSearch:
    def test_exact_matches_exhaustive(self, runner):
        bb = runner.invoke(main, ["search", "--q", "3", "--n", "2", "--exact",
                                  "--format", "json"])
        ex = runner.invoke(main, ["search", "--q", "3", "--n", "2",
                                  "--method", "exhaustive", "--format", "json"])
        assert bb.exit_code == 0 and ex.exit_code == 0
        assert json.loads(bb.output)["size"] == json.loads(ex.output)["size"] == 3

    def test_greedy_echoes_seed(self, runner):
        res = runner.invoke(main, ["search", "--q", "3", "--n", "2",
                                   "--method", "greedy", "--seed", "7",
                                   "--restarts", "3", "--format", "json"])
        payload = json.loads(res.output)
        assert payload["config"]["seed"] == 7
        assert payload["status"] == "lower_bound"

    def test_exact_flag_fails_on_budget(self, runner):
        res = runner.invoke(main, ["search", "--q", "3", "--n", "3", "--exact",
                                   "--budget-nodes", "5", "--format", "json"])
        assert res.exit_code == 1

    def test_resume_checkpoint_file(self, runner, tmp_path):
        ck = str(tmp_path / "ck.json")
        first = runner.invoke(main, ["search", "--q", "3", "--n", "3",
                                     "--budget-nodes", "10", "--resume", ck,
                                     "--format", "json"])
        assert json.loads(first.output)["status"] == "lower_bound"
        second = runner.invoke(main, ["search", "--q", "3", "--n", "3",
                                      "--resume", ck, "--format", "json"])
        payload = json.loads(second.output)
        assert payload["status"] == "exact" and payload["size"] == 5

    def test_exhaustive_cap_usage_error(self, runner):
        res = runner.invoke(main, ["search", "--q", "3", "--n", "3",
                                   "--method", "exhaustive"])
        assert res.exit_code == 2


class TestRankcheck:
    def test_clean_run(self, runner):
        res = runner.invoke(main, ["rankcheck", "--q", "3", "--m", "8",
                                   "--trials", "100", "--format", "json"])
        assert res.exit_code == 0
        payload = json.loads(res.output)
        assert payload["violations"] == 0
        assert payload["min_rank_observed"] >= 6

    def test_m1_vacuous(self, runner):
        res = runner.invoke(main, ["rankcheck", "--q", "3", "--m", "1",
                                   "--trials", "5"])
        assert res.exit_code == 0

    def test_even_q_usage_error(self, runner):
        res = runner.invoke(main, ["rankcheck", "--q", "2", "--m", "4"])
        assert res.exit_code == 2


class TestFieldResolution:
    def test_field_modulus_flag(self, runner):
        res = runner.invoke(main, ["construct", "--q", "9", "--n", "8",
                                   "--field-modulus", "1,0,1", "--format", "json"])
        assert res.exit_code == 0
        assert json.loads(res.output)["point_set"]["field"]["modulus"] == [1, 0, 1]

    def test_bad_modulus_rejected(self, runner):
        res = runner.invoke(main, ["construct", "--q", "9", "--n", "8",
                                   "--field-modulus", "2,0,1"])
        assert res.exit_code == 2

    def test_env_table_override(self, runner, tmp_path, monkeypatch):
        table = {"9": {"p": 3, "k": 2, "modulus": [2, 2, 1]}}  # t^2 + 2t + 2
        path = write(tmp_path, "fields.json", table)
        monkeypatch.setenv("RIGHTANGLE_FIELD_TABLE", path)
        res = runner.invoke(main, ["construct", "--q", "9", "--n", "8",
                                   "--format", "json"])
        assert res.exit_code == 0
        assert json.loads(res.output)["point_set"]["field"]["modulus"] == [2, 2, 1]

    def test_env_table_bad_entry_fails_loudly(self, runner, tmp_path, monkeypatch):
        table = {"9": {"p": 3, "k": 2, "modulus": [2, 0, 1]}}  # reducible
        path = write(tmp_path, "fields.json", table)
        monkeypatch.setenv("RIGHTANGLE_FIELD_TABLE", path)
        res = runner.invoke(main, ["construct", "--q", "9", "--n", "8"])
        assert res.exit_code == 2


def test_output_file_option(runner, tmp_path):
    out = tmp_path / "bounds.csv"
    res = runner.invoke(main, ["bounds", "--q", "3", "--n", "2",
                               "--format", "csv", "--out", str(out)])
    assert res.exit_code == 0
    assert out.read_text().startswith("n,lower_construction")
