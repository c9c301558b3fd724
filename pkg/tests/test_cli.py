import json
import subprocess
import sys
from pathlib import Path

import pytest

from equivspline.cli import run, run_corpus

GOLDEN = Path(__file__).parent / "golden"
THREE = json.dumps({"dim": 2, "vectors": [[1, 0], [0, 1], [1, 1]]})


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden_case(path):
    case = json.loads(path.read_text())
    code, out = run(case["argv"], json.dumps(case["input"]))
    assert code == case["exit"]
    if code == 0:
        assert json.loads(out)["result"] == case["expected"]
    else:
        assert out == ""


def test_seed_corpus_flag():
    code, summary = run_corpus(str(GOLDEN))
    assert code == 0 and summary["passed"]
    code, out = run(["--seed-corpus", str(GOLDEN)])
    assert code == 0 and json.loads(out)["passed"]


def test_hand_checked_values():
    _, out = run(["spline", "eval", "--point", "3"], json.dumps({"dim": 1, "vectors": [[1], [1], [1]]}))
    assert json.loads(out)["result"]["value"] == "9/2"
    _, out = run(["hilbert"], THREE)
    result = json.loads(out)["result"]
    assert [e["dim"] for e in result["by_degree"]] == [1, 2]
    assert [e["cohomological_degree"] for e in result["by_degree"]] == [0, 2]
    _, out = run(["verify", "--suite", "all"], THREE)
    assert json.loads(out)["result"]["passed"] is True


def test_deterministic_and_round_trip():
    first = run(["verify", "--suite", "all"], THREE)
    second = run(["verify", "--suite", "all"], THREE)
    assert first == second
    echoed = json.loads(first[1])["input"]
    assert run(["verify", "--suite", "all"], json.dumps(echoed)) == first


def test_labels_are_echoed():
    doc = {"dim": 1, "vectors": [[1], [2]], "labels": ["a", "b"]}
    code, out = run(["tutte"], json.dumps(doc))
    report = json.loads(out)
    assert code == 0 and report["input"]["labels"] == ["a", "b"]
    assert run(["tutte"], json.dumps(report["input"])) == (code, out)


def test_conventions_present():
    _, out = run(["matroid"], THREE)
    conv = json.loads(out)["conventions"]
    assert {"monomial_order", "indices", "list_order", "degrees"} <= set(conv)


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (["tutte"], "not json", 2),
        (["tutte"], json.dumps({"dim": 2}), 2),
        (["tutte"], json.dumps({"dim": 2, "vectors": [[1, 0, 0]]}), 2),
        (["tutte"], json.dumps({"dim": 1, "vectors": [[0]]}), 2),
        (["hilbert", "--ideal", "nonsense"], THREE, 2),
        (["spline", "eval", "--point", "a,b"], THREE, 2),
        (["spline", "eval", "--point", "1,1"], THREE, 3),
        (["spline", "eval", "--point", "1/2,1/3", "--face", "++-"], THREE, 3),
        (["hilbert", "--ideal", "level=7"], THREE, 3),
        (["dspace"], json.dumps({"dim": 2, "vectors": [[1, 1], [2, 2]]}), 3),
        ([], THREE, 2),
    ],
)
def test_exit_codes_without_partial_output(argv, stdin, code):
    got, out = run(argv, stdin)
    assert got == code
    assert out == ""


def test_timing_is_opt_in():
    _, plain = run(["tutte"], THREE)
    assert "timing_seconds" not in json.loads(plain)
    _, timed = run(["--timing", "tutte"], THREE)
    assert "timing_seconds" in json.loads(timed)


def test_console_entry_point_with_input_file(tmp_path):
    src = tmp_path / "x.json"
    src.write_text(THREE)
    proc = subprocess.run(
        [sys.executable, "-m", "equivspline.cli", "--input", str(src), "dspace"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["command"] == ["dspace"]
    assert report["result"]["total"] == 3
    bad = subprocess.run(
        [sys.executable, "-m", "equivspline.cli", "spline", "eval", "--point", "1,1"],
        input=THREE,
        capture_output=True,
        text=True,
        check=False,
    )
    assert bad.returncode == 3 and bad.stdout == ""
    assert json.loads(bad.stderr)["error"] == "precondition"
