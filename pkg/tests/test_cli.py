import csv
import io
import json
import subprocess
import sys

import pytest

from fullrank.cli import main
from fullrank.series import TruncatedSeries, partition_numbers


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_fullrank(capsys):
    code, out, _ = run(capsys, "table", "fullrank", "--t", "5", "--order", "60")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sum(int(r["count"]) for r in rows if r["n"] == "2") == 1
    assert len(rows) == 5 * 61


def test_table_fullrank_sources_agree(capsys):
    outputs = {
        source: run(capsys, "table", "fullrank", "--t", "4", "--order", "12", "--source", source)[1]
        for source in ("genfun", "lambert", "enumeration")
    }
    assert len(set(outputs.values())) == 1


def test_table_rank_t1_is_partition_numbers(capsys):
    code, out, _ = run(capsys, "table", "rank", "--t", "1", "--order", "20")
    assert code == 0
    counts = [int(r["count"]) for r in csv.DictReader(io.StringIO(out))]
    assert counts == partition_numbers(20).coefficients()


def test_table_rank_json(capsys):
    code, out, _ = run(capsys, "table", "rank", "--t", "3", "--order", "5", "--format", "json", "--source", "G")
    payload = json.loads(out)
    assert code == 0 and payload["provenance"] == "genfun-G" and payload["counts"][0][0] == "1"


def test_table_f_and_g(capsys):
    code, out, _ = run(capsys, "table", "f", "--t", "7", "--r", "1", "--s", "3", "--d", "3", "--order", "70")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,r,s,d,n,value"
    assert lines[1] == "7,1,3,3,0,1"
    code, out, _ = run(capsys, "table", "g", "--t", "5", "--r", "0", "--s", "1", "--order", "10")
    assert code == 0 and out.splitlines()[1] == "5,0,1,,0,1"


@pytest.mark.parametrize("argv", [
    ("table", "rank", "--t", "0"),
    ("table", "rank", "--order", "5"),
    ("table", "rank", "--t", "3", "--order", "-1"),
    ("table", "rank", "--t", "3", "--source", "lambert"),
    ("table", "f", "--t", "3", "--r", "0"),
    ("verify", "nonsense"),
    ("verify",),
    ("verify", "thm1.3.1", "--t", "4"),
    ("verify", "prop3.2", "--t", "7", "--r", "2"),
    ("scan", "--t", "5", "--r", "0", "--s", "7"),
    ("scan", "--t", "5", "--r", "0", "--s", "1", "--from", "9", "--to", "3"),
    ("table", "rank", "--t", "3", "--threads", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "out.csv"
    code, _, err = run(capsys, "table", "rank", "--t", "3", "--order", "3", "--out", str(target))
    assert code == 2 and "cannot write" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "rank", "--t", "3", "--order", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("t,n,r,count\n")


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "thm1.3.1", "--t", "9", "--order", "150")
    assert code == 0
    assert json.loads(out) == {"id": "thm1.3.1", "params": {"t": 9}, "order": 150, "status": "pass", "first_discrepancy": None}
    code, out, _ = run(capsys, "verify", "thm5.2.3", "--order", "150")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "injection", "--order", "13")
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "thm5.2.3\t" in out


def test_scan_examples(capsys):
    code, out, _ = run(capsys, "scan", "--t", "11", "--r", "0", "--s", "3", "--to", "300")
    payload = json.loads(out)
    assert code == 0
    assert payload["classes"][0]["pattern"] == "all-positive-from"
    assert isinstance(payload["classes"][0]["n0"], int)
    code, out, _ = run(capsys, "scan", "--t", "4", "--r", "1", "--s", "2", "--to", "200")
    cls = json.loads(out)["classes"][0]
    assert cls["pattern"] == "all-negative-from" and cls["zeros"] == [0, 1, 2, 4]
    code, out, _ = run(capsys, "scan", "--t", "5", "--r", "1", "--s", "2", "--to", "200")
    assert json.loads(out)["classes"][0]["pattern"] == "identically-zero"


def test_scan_default_window(capsys):
    code, out, _ = run(capsys, "scan", "--t", "5", "--r", "0", "--s", "1", "--by-class")
    payload = json.loads(out)
    assert payload["window"] == [0, 200] and payload["by_class"] is True


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "R2", "--t", "3", "--order", "10")
    s = TruncatedSeries.from_json(out)
    assert code == 0 and s.modulus == 3 and s.order == 10


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"t": 4, "r": 1, "s": 2, "to": 40}))
    code, out, _ = run(capsys, "scan", "--config", str(cfg))
    assert code == 0 and json.loads(out)["window"] == [0, 40]
    # explicit flags win over the config
    code, out, _ = run(capsys, "scan", "--config", str(cfg), "--to", "30")
    assert json.loads(out)["window"] == [0, 30]
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert run(capsys, "scan", "--config", str(cfg))[0] == 2


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    outputs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("DURFEE_THREADS", threads)
        outputs.append(run(capsys, "verify", "prop3.2", "--order", "40")[1])
    assert outputs[0] == outputs[1]
    monkeypatch.setenv("DURFEE_THREADS", "many")
    assert run(capsys, "verify", "prop3.2", "--order", "10")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fullrank", "verify", "zetainv", "--t", "6"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
