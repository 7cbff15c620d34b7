import json
import subprocess
import sys

import pytest

from rigid_symbols.cli import main

from conftest import B72_BOTTOM, B72_TEXT, B72_TOP


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_symbol_all_methods(capsys):
    code, out, _ = run(capsys, "symbol", "--theory", "B", B72_TEXT, "--method", "all")
    assert code == 0
    assert "methods agree: def, closed, legacy" in out
    assert out.splitlines()[0] == f"({' '.join(map(str, B72_TOP))} / {' '.join(map(str, B72_BOTTOM))})"


def test_symbol_machine(capsys):
    code, out, _ = run(capsys, "symbol", "--theory", "B", "1^3", "--method", "all", "--format", "machine")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["method"] for r in records] == ["def", "closed", "legacy"]
    assert records[0] == {"theory": "B", "partition": [1, 1, 1], "top": [0, 0], "bottom": [1], "method": "def"}


def test_symbol_def_accepts_non_rigid(capsys):
    code, out, _ = run(capsys, "symbol", "--theory", "B", "3 1^2")
    assert code == 0 and out.startswith("(")
    code, _, err = run(capsys, "symbol", "--theory", "B", "3 1^2", "--method", "closed")
    assert code == 2 and "not rigid" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--theory", "C", "2^2")
    assert code == 0
    assert "valid: yes, rank 2" in out and "rigid: no" in out
    code, out, _ = run(capsys, "classify", "--theory", "C", "2^2", "--format", "machine")
    assert json.loads(out) == {"theory": "C", "partition": [2, 2], "valid": True, "rank": 2,
                               "rigid": False, "reason": "gap between 2 and 0"}


def test_classify_loose(capsys):
    code, out, _ = run(capsys, "classify", "--theory", "C", "2^2", "--gap-convention", "loose")
    assert "part 2 appears exactly twice" in out


def test_classify_invalid(capsys):
    code, out, _ = run(capsys, "classify", "--theory", "B", "2 1")
    assert code == 0 and "valid: no" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--theory", "D", "--rank", "2", "--format", "machine")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert lines == [{"theory": "D", "rank": 2, "partition": [1, 1, 1, 1]}, {"theory": "D", "count": 1}]


def test_enumerate_needs_bound(capsys):
    code, _, err = run(capsys, "enumerate", "--theory", "D")
    assert code == 2 and "--rank" in err


def test_verify_all_pass(capsys):
    code, out, _ = run(capsys, "verify", "--theory", "B", "--max-rank", "7")
    assert code == 0 and "all checks pass" in out
    assert "23 rigid partitions" in out


def test_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "verify", "--theory", "B", "--max-rank", "3", "--gap-convention", "loose")
    assert code == 1 and "first counterexample" in out


def test_verify_machine_is_worker_independent(capsys):
    _, one, _ = run(capsys, "verify", "--theory", "C", "--max-rank", "6", "--format", "machine")
    _, two, _ = run(capsys, "verify", "--theory", "C", "--max-rank", "6", "--format", "machine", "--workers", "2")
    assert one == two
    assert json.loads(one.splitlines()[-1])["failures"] == 0


def test_explain(capsys):
    code, out, _ = run(capsys, "explain", "--theory", "B", B72_TEXT)
    assert code == 0 and out.splitlines()[0].endswith("9 blocks")
    code, out, _ = run(capsys, "explain", "--theory", "B", B72_TEXT, "--format", "machine")
    assert [json.loads(x)["kind"] for x in out.splitlines()][:2] == ["first-row-B", "rectangle"]


@pytest.mark.parametrize(
    "argv",
    [
        ["symbol", "--theory", "B", "3,1,2"],
        ["symbol", "--theory", "X", "1"],
        ["symbol", "--theory", "B", "2 1"],
        ["verify", "--theory", "B", "--max-rank", "0"],
        ["bogus"],
    ],
)
def test_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "symbol", "--theory", "C", "1^2", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("(0 / 1)")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rigid_symbols", "symbol", "--theory", "C", "1^2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[0] == "(0 / 1)"
