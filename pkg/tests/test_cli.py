import argparse
import json
from fractions import Fraction as F

import pytest

from d4flat.cli import main, parse_order


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_halphen(capsys):
    code, out, _ = run(capsys, "verify", "halphen", "--order", "8")
    assert code == 0
    assert sum(line.startswith("PASS") for line in out.splitlines()) == 3
    assert "FAIL" not in out


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "char-identities", "--order", "6")
    second = run(capsys, "verify", "char-identities", "--order", "6")
    assert first == second


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "a-matrices", "--order", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[0]["name"] == "a-matrices" and data[0]["status"] == "pass"


def test_table_j0(capsys):
    code, out, _ = run(capsys, "table", "j0", "--order", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    mat = [[F(x) for x in row] for row in data["matrix"]]
    assert [mat[i][i] for i in range(1, 5)] == [2, 2, 2, 2]
    assert mat[0][5] == mat[5][0] == 1 and mat[0][0] == 0


def test_table_duality(capsys):
    code, out, _ = run(capsys, "table", "duality", "--order", "4")
    assert code == 0
    assert "k=2: [[48, 0], [0, 1/4]]" in out.splitlines()


def test_expand_f0(capsys):
    code, out, _ = run(capsys, "expand", "f0", "--order", "2")
    assert code == 0
    assert out.startswith("q^{1/2} + 4*q^{3/2}")


def test_expand_csv_columns(capsys):
    code, out, _ = run(capsys, "expand", "eta", "--order", "2", "--format", "csv")
    rows = out.strip().splitlines()
    assert rows[0] == "exponent_num,exponent_den,coeff_num,coeff_den"
    assert rows[1] == "1,24,1,1"


def test_expand_element_text(capsys):
    code, out, _ = run(capsys, "expand", "chi0", "--order", "1/24")
    assert code == 0
    assert out.splitlines()[1] == "q^{-1/6}: 1*S(0,0,0,0)"


def test_kz_with_weight(capsys):
    code, out, _ = run(capsys, "expand", "kz1", "--k", "2", "--order", "3")
    assert out.strip() == "1 + 24*q + 24*q^2 + O(q^3)"


def test_unknown_target(capsys):
    code, _, err = run(capsys, "expand", "nonsense")
    assert code == 2 and "nonsense" in err
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys, "table", "nonsense")[0] == 2


def test_export_writes_file(tmp_path, capsys):
    path = tmp_path / "e4.json"
    code, out, _ = run(capsys, "export", "E4", "--order", "3", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["trunc"] == "3" and data["terms"][1]["coeff_num"] == 240


def test_order_parsing():
    assert parse_order("4") == 4
    assert parse_order("7/24") == F(7, 24)
    for bad in ("0", "-1", "1/5", "x"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_order(bad)
