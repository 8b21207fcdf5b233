"""Command-line surface: outputs on stdout, errors as JSON on the last stderr line."""

import json

import pytest

from app.algebra import LeibnizAlgebra
from app.cli import main
from app.linalg import RATIONALS
from app.services.algebra_io import emit_algebra


def last_error(captured):
    return json.loads(captured.err.strip().splitlines()[-1])


@pytest.fixture
def family1a_file(tmp_path, family1a):
    path = tmp_path / "family1a.json"
    path.write_text(emit_algebra(family1a), encoding="utf-8")
    return path


def test_catalog_emits_a_canonical_file(capsys, family1a):
    assert main(["catalog", "Family1a", "c=1"]) == 0
    assert capsys.readouterr().out == emit_algebra(family1a)


def test_catalog_writes_to_a_file(tmp_path, capsys):
    out = tmp_path / "heis.json"
    assert main(["catalog", "Heisenberg", "m=2", "--field", "GF(3)", "-o", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["field"] == {"GF": 3}
    assert data["dim"] == 5


def test_catalog_reduces_mod_p(capsys):
    assert main(["catalog", "Family1a", "c=7", "--mod", "5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["products"]["x*y"] == {"y": "2", "z": "1"}


def test_validate_good_file(family1a_file, capsys):
    assert main(["validate", str(family1a_file)]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_validate_reports_the_witness(tmp_path, capsys, symmetric_square):
    bad = LeibnizAlgebra.from_products(RATIONALS, ["x", "z"], symmetric_square, checked=False)
    path = tmp_path / "bad.json"
    path.write_text(emit_algebra(bad), encoding="utf-8")
    assert main(["validate", str(path)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["ok"] is False
    assert out["witness"]["triple"] == ["z", "x", "x"]


@pytest.mark.parametrize("p, code", [(2, 0), (3, 1)])
def test_validate_after_reduction_reports_instead_of_raising(tmp_path, capsys, symmetric_square, p, code):
    bad = LeibnizAlgebra.from_products(RATIONALS, ["x", "z"], symmetric_square, checked=False)
    path = tmp_path / "bad.json"
    path.write_text(emit_algebra(bad), encoding="utf-8")
    assert main(["validate", str(path), "--mod", str(p)]) == code
    out = json.loads(capsys.readouterr().out)
    assert out["ok"] is (code == 0)
    if code:
        assert out["witness"]["triple"] == ["z", "x", "x"]


def test_report_without_timing_is_byte_stable(family1a_file, capsys):
    assert main(["report", str(family1a_file), "--no-timing"]) == 0
    first = capsys.readouterr().out
    assert main(["report", str(family1a_file), "--no-timing"]) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    assert "timing_ms" not in report
    assert report["engine"] == "char0"
    assert report["invariants"]["phi"]["engine"] == "brute"


def test_brute_engine_on_q_exits_3(family1a_file, capsys):
    assert main(["report", str(family1a_file), "--engine", "brute"]) == 3
    assert last_error(capsys.readouterr())["type"] == "wrong_characteristic"


def test_non_split_operator_exits_5(tmp_path, capsys, rotation):
    path = tmp_path / "rotation.json"
    path.write_text(emit_algebra(rotation), encoding="utf-8")
    assert main(["report", str(path)]) == 5
    error = last_error(capsys.readouterr())
    assert error["type"] == "non_split"
    assert "operator" in error


def test_report_after_reduction(family1a_file, capsys):
    assert main(["report", str(family1a_file), "--mod", "5", "--no-timing"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["field"] == "GF(5)"
    assert report["predicates"]["minimal_non_elementary"] is True


def test_parse_errors_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"dim": 1,\n "basis": ["x"], "products": {"x*y": {"x": "1"}}}', encoding="utf-8")
    assert main(["validate", str(path)]) == 2
    error = last_error(capsys.readouterr())
    assert error["type"] == "parse_error"
    assert error["context"]["line"] == 2


def test_verify_emits_json_lines_in_target_order(capsys):
    targets = ["catalog:Thm17_XsquareZero", "catalog:CyclicNilpotent:n=3"]
    assert main(["verify", "thm17", *targets]) == 0
    lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["target"] for r in lines] == targets
    assert all(r["status"] == "pass" for r in lines)
    assert [r["detail"] for r in lines] == ["case 4", "case 1"]


def test_verify_writes_to_a_file(tmp_path, capsys):
    out = tmp_path / "records.jsonl"
    assert main(["verify", "nilpotent", "catalog:Heisenberg", "-o", str(out)]) == 0
    [record] = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert record["theorem"] == "cor13"


def test_lattice_over_gf3(family1a_file, capsys):
    assert main(["lattice", str(family1a_file), "--mod", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["field"] == "GF(3)"
    assert report["invariants"]["phi"]["dim"] == 1


def test_lattice_on_q_exits_3(family1a_file, capsys):
    assert main(["lattice", str(family1a_file)]) == 3


@pytest.mark.parametrize(
    "argv, error_type",
    [
        (["catalog", "Family1a", "c=0"], "bad_params"),
        (["catalog", "Sl2Sum", "--field", "GF(2)"], "characteristic_clash"),
        (["catalog", "Family1a", "c"], "bad_params"),
    ],
)
def test_bad_catalog_requests_exit_2(argv, error_type, capsys):
    assert main(argv) == 2
    assert last_error(capsys.readouterr())["type"] == error_type
