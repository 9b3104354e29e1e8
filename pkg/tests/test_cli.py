import json
import subprocess
import sys

import pytest

from fgc.cli import main, parse_constraints
from fgc.errors import InputError
from fgc.graph_core import from_edgelist, from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_edgelist(capsys):
    code, out, _ = run(capsys, "generate", "--family", "apollonian", "--n", "3", "--format", "edgelist")
    assert code == 0
    assert from_edgelist(out).vertex_count == 16


def test_generate_k4(capsys):
    code, out, _ = run(capsys, "generate", "--family", "ext-hanoi", "--n", "1")
    g = from_edgelist(out)
    assert code == 0 and g.vertex_count == 4 and g.num_edges == 6


def test_generate_json_to_file(tmp_path, capsys):
    path = tmp_path / "h.json"
    code, out, _ = run(capsys, "generate", "--family", "hanoi", "--n", "2", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert from_json(path.read_text()).num_edges == 12


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "--family", "hanoi", "--n", "0"],
        ["generate", "--family", "cube", "--n", "2"],
        ["generate", "--family", "hanoi"],
        ["solve", "--family", "apollonian", "--n", "2", "--problem", "matching", "--constraints", "X"],
        ["solve", "--family", "apollonian", "--n", "2", "--problem", "matching", "--constraints", "X=include"],
        ["witness", "--family", "apollonian", "--n", "4", "--what", "pm"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_resource_limits_exit_3(capsys):
    assert run(capsys, "generate", "--family", "apollonian", "--n", "40")[0] == 3
    argv = ["solve", "--family", "apollonian", "--n", "3", "--problem", "matching", "--budget", "5"]
    assert run(capsys, *argv)[0] == 3
    assert run(capsys, "recur", "--quantity", "matching-counts", "--n", "99")[0] == 3


def test_solve_matching(capsys):
    code, out, _ = run(capsys, "solve", "--family", "apollonian", "--n", "3", "--problem", "matching")
    data = json.loads(out)
    assert code == 0
    assert (data["size"], data["count"]) == (7, "738")


def test_solve_constrained(capsys):
    argv = ["solve", "--family", "apollonian", "--n", "3", "--problem", "matching", "--constraints", "X=cover,Y=vacate,Z=vacate"]
    data = json.loads(run(capsys, *argv)[1])
    assert (data["size"], data["count"]) == (5, "246")
    assert data["constraints"] == {"X": "cover", "Y": "vacate", "Z": "vacate"}


def test_solve_domination_ext_hanoi(capsys):
    data = json.loads(run(capsys, "solve", "--family", "ext-hanoi", "--n", "2", "--problem", "domination")[1])
    assert (data["size"], data["count"]) == (3, "22")


def test_solve_perfect_count(capsys):
    data = json.loads(run(capsys, "solve", "--family", "ext-hanoi", "--n", "3", "--problem", "perfect-count")[1])
    assert data["count"] == "48"


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table1", "--format", "csv")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "n,1,2,3,4,5"
    assert lines[1] == "V,4,7,16,43,124"
    assert lines[5].endswith(",5030805301520123200352256")
    assert "\r" not in out


def test_growth_output(capsys):
    code, out, _ = run(capsys, "growth", "--max-m", "7", "--format", "csv")
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "m,lower,upper,gap"
    m, lo, hi, gap = rows[5].split(",")
    assert m == "7" and float(gap) < 1e-2
    assert len(lo.split(".")[1]) == 10
    assert rows[-1].startswith("z_estimate,")


def test_recur_json(capsys):
    data = json.loads(run(capsys, "recur", "--quantity", "matching-counts", "--n", "5", "--format", "json")[1])
    assert data["tau"] == "5030805301520123200352256"


def test_recur_domination(capsys):
    out = run(capsys, "recur", "--quantity", "domination-counts", "--n", "7")[1]
    assert out == "w = 1\nx = 8\ny = 2\nz = 1\n"


def test_witness_code_class(capsys):
    code, out, _ = run(capsys, "witness", "--family", "ext-hanoi", "--n", "3", "--what", "mds", "--k", "4")
    assert code == 0
    assert len(json.loads(out)) == 7 and 27 in json.loads(out)


def test_witness_pm(capsys):
    pairs = json.loads(run(capsys, "witness", "--family", "ext-hanoi", "--n", "2", "--what", "pm")[1])
    assert len(pairs) == 5


def test_verify_reduced(capsys):
    code, out, _ = run(capsys, "verify", "--max-oracle-n", "2")
    assert code == 0
    assert "FAIL" not in out and out.rstrip().endswith("all checks passed")


def test_verify_detects_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "--max-oracle-n", "3", "--inject-fault", "matching-base")
    assert code == 1
    assert "[FAIL] A_3 matching profile" in out


def test_hidden_flag_not_in_help(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--help"])
    assert "inject" not in capsys.readouterr().out


def test_parse_constraints():
    assert parse_constraints("X=cover, Y = vacate") == {"X": "cover", "Y": "vacate"}
    assert parse_constraints("") == {}
    with pytest.raises(InputError):
        parse_constraints("Xcover")


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "fgc.cli", "table1", "--format", "csv"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b


def test_module_entry_point_exit_code():
    r = subprocess.run([sys.executable, "-m", "fgc.cli", "generate", "--family", "hanoi", "--n", "0"], capture_output=True)
    assert r.returncode == 2
