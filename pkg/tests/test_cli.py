import json
from pathlib import Path

from nonassoc.cli import main

DATA = Path(__file__).parent.parent / "src" / "nonassoc" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_fixtures(capsys):
    code, out, _ = run(capsys, "list-fixtures")
    assert code == 0
    assert out.splitlines()[0] == "F1"
    assert "F9" in out.splitlines()


def test_check_null_algebra_passes(capsys):
    code, out, _ = run(
        capsys, "check",
        "--algebra", str(DATA / "examples" / "null2.json"),
        "--identity", "jacobi",
    )
    assert code == 0
    assert "result: PASS" in out


def test_check_nonassociative_fails_with_witness(capsys):
    code, out, _ = run(
        capsys, "check",
        "--algebra", str(DATA / "examples" / "f3plus.json"),
        "--identity", "associativity",
    )
    assert code == 1
    assert "FAIL" in out
    assert "witness indices" in out
    assert "lhs = " in out and "rhs = " in out
    # exact rationals only, no decimals
    assert "." not in out.replace("result: FAIL", "").replace(".json", "")


def test_check_random_corroboration(capsys):
    code, out, _ = run(
        capsys, "check",
        "--algebra", str(DATA / "fixtures" / "F1b.algebra.json"),
        "--identity", "associativity",
        "--random", "trials=50,seed=11",
    )
    assert code == 0
    assert "random(trials=50, seed=11): PASS" in out


def test_check_reports_are_byte_identical(capsys):
    args = (
        "check",
        "--algebra", str(DATA / "examples" / "f3plus.json"),
        "--identity", "associativity",
        "--random", "trials=20,seed=3",
        "--json",
    )
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 1
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["passed"] is False
    assert payload["checks"][0]["witness"]["indices"] == [0, 0, 1]


def test_verify_fixture_cli(capsys):
    code, out, _ = run(capsys, "verify-fixture", "F1b")
    assert code == 0
    assert "result: PASS" in out


def test_verify_fixture_all_json(capsys):
    code, out, _ = run(capsys, "verify-fixture", "--all", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["reports"]) == 13


def test_verify_fixture_reports_byte_identical(capsys):
    code1, out1, _ = run(capsys, "verify-fixture", "--all", "--json")
    code2, out2, _ = run(capsys, "verify-fixture", "--all", "--json")
    assert code1 == code2 == 0 and out1 == out2


def test_verify_fixture_unknown(capsys):
    code, _, err = run(capsys, "verify-fixture", "F99")
    assert code == 2
    assert "error:" in err


def test_props_with_operator_file(capsys):
    code, out, _ = run(
        capsys, "props",
        "--algebra", str(DATA / "fixtures" / "F10.algebra.json"),
        "--operator", str(DATA / "fixtures" / "F10.operator.json"),
        "--property", "rota_baxter:lam=1",
    )
    assert code == 0
    assert "rota_baxter(1): PASS" in out


def test_props_from_u(capsys):
    code, out, _ = run(
        capsys, "props",
        "--algebra", str(DATA / "fixtures" / "F1b.algebra.json"),
        "--from-u", str(DATA / "fixtures" / "F1b.u.json"),
        "--embedding", str(DATA / "fixtures" / "F1b.embedding.json"),
        "--property", "endomorphism",
        "--property", "idempotent_op",
    )
    assert code == 0
    assert "endomorphism: PASS" in out
    assert "idempotent_op: PASS" in out


def test_props_failing_property(capsys):
    code, out, _ = run(
        capsys, "props",
        "--algebra", str(DATA / "fixtures" / "F2.algebra.json"),
        "--operator", str(DATA / "fixtures" / "F2.operator.json"),
        "--property", "idempotent_op",
    )
    assert code == 1
    assert "idempotent_op: FAIL" in out


def test_derive_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "lie.json"
    code, out, _ = run(
        capsys, "derive",
        "--algebra", str(DATA / "fixtures" / "F1b.algebra.json"),
        "--operator", str(DATA / "fixtures" / "F1b.operator.json"),
        "--construction", "lie_endo",
        "--out", str(out_path),
    )
    assert code == 0
    assert out_path.exists()
    code, out, _ = run(
        capsys, "check", "--algebra", str(out_path), "--identity", "jacobi"
    )
    assert code == 0


def test_derive_with_param(tmp_path, capsys):
    out_path = tmp_path / "nov.json"
    code, _, _ = run(
        capsys, "derive",
        "--algebra", str(DATA / "fixtures" / "F7.algebra.json"),
        "--operator", str(DATA / "fixtures" / "F7.operator.json"),
        "--construction", "novikov_affine",
        "--param", "a=1/2",
        "--out", str(out_path),
    )
    assert code == 0


def test_search_element_grid(capsys):
    code, out, _ = run(
        capsys, "search-element",
        "--ambient", str(DATA / "fixtures" / "F9.ambient.json"),
        "--embedding", str(DATA / "fixtures" / "F9.embedding.json"),
        "--lin", "stabilize",
        "--quad", "nilpotent2",
        "--grid", str(DATA / "examples" / "grid_f9.json"),
    )
    assert code == 0
    assert "(1, -1, 1, -1)" in out


def test_search_element_univariate(capsys):
    code, out, _ = run(
        capsys, "search-element",
        "--ambient", str(DATA / "fixtures" / "F9.ambient.json"),
        "--embedding", str(DATA / "fixtures" / "F9.embedding.json"),
        "--lin", "stabilize",
        "--quad", "idempotent",
        "--strategy", "univariate",
        "--pin", "1=0", "--pin", "2=0", "--pin", "3=0",
    )
    assert code == 0
    assert "(1, 0, 0, 0)" in out


def test_malformed_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = run(capsys, "check", "--algebra", str(bad), "--identity", "jacobi")
    assert code == 2
    assert "error:" in err


def test_unknown_identity_exits_2(capsys):
    code, _, err = run(
        capsys, "check",
        "--algebra", str(DATA / "examples" / "null2.json"),
        "--identity", "nonexistent",
    )
    assert code == 2
