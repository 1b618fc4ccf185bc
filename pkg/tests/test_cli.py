import csv
import io
import json
import subprocess
import sys

import pytest

from twobridge import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


class TestInv:
    def test_23_85(self):
        code, out = run("inv", "23/85")
        rec = json.loads(out)
        assert code == 0
        assert (rec["unoriented_genus"], rec["crosscap"], rec["crossing_number"], rec["type"]) == (4, 4, 11, "knot")
        assert rec["sub"] == "sub:[4,4,2,2,3]"

    def test_trefoil(self):
        rec = json.loads(run("inv", "1/3")[1])
        assert (rec["unoriented_genus"], rec["crosscap"]) == (1, 1)

    def test_oracle_cross_check(self):
        code, out = run("inv", "4/15", "--oracle")
        rec = json.loads(out)
        assert code == 0 and rec["methods_agree"]
        assert (rec["unoriented_genus"], rec["crosscap"]) == (2, 3)
        assert rec["oracle"]["crosscap"] == 3

    def test_cf_input_and_normalization(self):
        a = json.loads(run("inv", "sub:[4,4,2,2,3]")[1])
        b = json.loads(run("inv", "108/85")[1])
        assert a == b
        assert a["fraction"] == "23/85"

    def test_link_goes_to_oracle(self):
        rec = json.loads(run("inv", "3/8")[1])
        assert rec["components"] == 2 and rec["method"] == "oracle"
        assert rec["crosscap"] is not None and rec["even"] is None

    def test_link_over_budget(self, capsys):
        code, out = run("inv", "1/26")
        assert code == 3 and out == ""
        assert "--budget 26" in capsys.readouterr().err

    def test_oracle_over_budget(self):
        assert run("inv", "1/25", "--oracle", "--budget", "20")[0] == 3

    def test_knot_skips_oracle_without_flag(self):
        assert run("inv", "1/25", "--budget", "20")[0] == 0

    @pytest.mark.parametrize("text", ["foo", "3/3", "1/0", "add:[0]"])
    def test_bad_input(self, text, capsys):
        assert run("inv", text)[0] == 2
        assert "error" in capsys.readouterr().err


class TestCensus:
    def test_k6_tuples(self):
        code, out = run("census", "--c", "6", "--family", "K")
        assert code == 0
        assert out.splitlines()[0] == "2,2,2,3" and len(out.splitlines()) == 10

    def test_counts(self):
        rec = json.loads(run("census", "--c", "7", "--family", "KP", "--emit", "counts")[1])
        assert rec == {"c": 7, "family": "KP", "count": 6, "W": 14, "Z": 2}

    def test_signed(self):
        assert run("census", "--c", "7", "--family", "KE")[1] == "-4,-4\n4,4\n"

    def test_empty_e0(self):
        assert run("census", "--c", "0", "--family", "E")[1] == "\n"

    def test_bad_family(self):
        assert run("census", "--c", "6", "--family", "X")[0] == 2

    def test_bad_c(self):
        assert run("census", "--c", "1", "--family", "K")[0] == 2


class TestTable:
    def test_csv(self):
        code, out = run("table", "--from", "3", "--to", "12")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert list(rows[0]) == ["c", "K_count", "W", "Z", "WP", "ZP", "GammaBar", "eps1", "KE", "KEP", "eps2", "gammaBar"]
        row7 = rows[4]
        assert row7["c"] == "7" and row7["GammaBar"] == "16/7" and row7["eps2"] == "1/7"

    def test_json(self):
        rows = json.loads(run("table", "--from", "7", "--to", "8", "--format", "json")[1])
        assert rows[0]["gammaBar"] == "17/7"
        assert all(isinstance(v, (int, str)) for r in rows for v in r.values())

    def test_output_file(self, tmp_path):
        target = tmp_path / "t.csv"
        code, out = run("table", "--from", "3", "--to", "5", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("c,K_count")

    def test_bad_range(self):
        assert run("table", "--from", "9", "--to", "8")[0] == 2
        assert run("table", "--from", "2", "--to", "8")[0] == 2

    def test_deterministic(self):
        assert run("table", "--from", "3", "--to", "30") == run("table", "--from", "3", "--to", "30")


class TestVerify:
    def test_small_run(self):
        code, out = run("verify", "--max-c", "9", "--oracle-max-c", "6")
        assert code == 0
        assert out.strip().endswith("14/14 checks passed")
        assert all(line.startswith("PASS") for line in out.splitlines()[:-1])

    def test_below_minimum(self):
        assert run("verify", "--max-c", "6")[0] == 2

    def test_oracle_over_budget(self):
        assert run("verify", "--max-c", "8", "--oracle-max-c", "10", "--budget", "9")[0] == 3

    def test_failure_exit_code(self, monkeypatch):
        monkeypatch.setattr(cli.verify, "check_epsilon1", lambda max_c: "c=11: expected 1, got 2")
        code, out = run("verify", "--max-c", "11", "--oracle-max-c", "0")
        assert code == 1
        assert "FAIL  average genus closed form" in out and "expected 1, got 2" in out


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def test_module_entry_point(tmp_path):
    env = {"NO_COLOR": "1", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "twobridge", "inv", "1/3"], capture_output=True, text=True,
                          env=env, cwd=tmp_path)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["crosscap"] == 1
    proc = subprocess.run([sys.executable, "-m", "twobridge", "verify", "--max-c", "3"], capture_output=True,
                          text=True, env=env, cwd=tmp_path)
    assert proc.returncode == 2 and proc.stdout == "" and "at least 7" in proc.stderr
