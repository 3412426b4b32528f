import csv
import io
import json

import pytest

from cubecut.cli import run
from cubecut.hypercube import build_hypercube, format_graph, gray_numbering, format_numbering


def invoke(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_bounds_csv(capsys):
    status, out, _ = invoke(capsys, "bounds", "--n-max", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert status == 0
    assert [int(r["ct_value"]) for r in rows] == [1, 3, 6, 13, 26]
    assert [int(r["n"]) for r in rows] == [2, 3, 4, 5, 6]


def test_bounds_json_envelope(capsys):
    status, out, _ = invoke(capsys, "bounds", "--n-max", "3")
    doc = json.loads(out)
    assert status == 0 and doc["status"] == 0
    assert doc["command"] == "bounds" and doc["parameters"]["n_max"] == 3
    assert [r["lcw_value"] for r in doc["payload"]] == [2, 5]


def test_theta_csv(capsys):
    status, out, _ = invoke(capsys, "theta", "--n", "3")
    lines = out.strip().splitlines()
    assert status == 0
    assert lines[0] == "l,theta"
    assert lines[1:6] == ["0,0", "1,3", "2,4", "3,5", "4,4"]
    _, exact_out, _ = invoke(capsys, "theta", "--n", "3", "--exact")
    assert exact_out == out


def test_theta_exact_guard_exit_code(capsys):
    status, out, err = invoke(capsys, "theta", "--n", "6", "--exact")
    assert status == 3 and out == "" and "n <= 4" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["bounds", "--n-max", "3", "--bogus"])
    assert exc.value.code == 2


def test_missing_file_exits_4(capsys, tmp_path):
    status, _, err = invoke(capsys, "metrics", "--graph", str(tmp_path / "absent.txt"))
    assert status == 4 and err


def test_metrics_from_files(capsys, tmp_path):
    gpath = tmp_path / "q3.txt"
    npath = tmp_path / "eta.txt"
    gpath.write_text(format_graph(build_hypercube(3)))
    npath.write_text(format_numbering(gray_numbering(3)))
    status, out, _ = invoke(capsys, "metrics", "--graph", str(gpath), "--numbering", str(npath))
    payload = json.loads(out)["payload"]
    assert status == 0
    assert {k: payload[k] for k in ("lbw", "lwl", "lcw", "cbw", "cwl", "ccw")} == {
        "lbw": 7, "lwl": 28, "lcw": 5, "cbw": 3, "cwl": 20, "ccw": 3}
    assert payload["exact"] is True
    assert len(payload["routing"]) == 12 and max(payload["profile"]) == 3


def test_metrics_rejects_size_mismatch(capsys, tmp_path):
    npath = tmp_path / "eta.txt"
    npath.write_text("cyclic: 1 2 3 4\n")
    status, _, _ = invoke(capsys, "metrics", "--n", "3", "--numbering", str(npath))
    assert status == 3


def test_split_gray_q5(capsys):
    status, out, _ = invoke(capsys, "split", "--n", "5")
    payload = json.loads(out)["payload"]
    assert status == 0
    assert len(payload["sweeps"]) == 10
    assert payload["easy_split"] == "11/5" and payload["theorem_hypothesis"]
    assert payload["witness"]["bracket"][0][0] == 11


def test_search_round_trip_into_metrics(capsys, tmp_path):
    status, out, _ = invoke(capsys, "search", "ccw", "--n", "3")
    payload = json.loads(out)["payload"]
    assert status == 0 and payload["exact"] and payload["optimum"] == 3
    npath = tmp_path / "witness.txt"
    npath.write_text(payload["witness"] + "\n")
    status, out, _ = invoke(capsys, "metrics", "--n", "3", "--numbering", str(npath))
    assert json.loads(out)["payload"]["ccw"] == 3


def test_search_lcw(capsys):
    status, out, _ = invoke(capsys, "search", "lcw", "--n", "3")
    assert status == 0 and json.loads(out)["payload"]["optimum"] == 5


def test_search_output_is_byte_stable(capsys):
    first = invoke(capsys, "search", "ccw", "--n", "4", "--seed", "3")[1]
    second = invoke(capsys, "search", "ccw", "--n", "4", "--seed", "3")[1]
    assert first == second


def test_verify_small(capsys):
    status, out, _ = invoke(capsys, "verify", "--n-max", "3")
    doc = json.loads(out)
    assert status == 0
    assert all(row["passed"] for row in doc["payload"])
    assert len(doc["payload"]) == 10
