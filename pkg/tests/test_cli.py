import json
import subprocess
import sys

import pytest

from gxclean.cli import EXIT_OK, EXIT_PROPERTY_FAILS, ERROR_CODES, exit_code_for, main
from gxclean.decompose import is_valid, witness_from_dict
from gxclean.errors import ParseError
from gxclean.parsing import parse_ring_spec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_table_and_json(capsys):
    code, out, _ = run(capsys, "info", "Mat 2 (Zn 2)")
    assert code == EXIT_OK
    assert "order" in out and "16" in out
    code, out, _ = run(capsys, "info", "Tri 2 (Zn 2)", "--format", "json")
    d = json.loads(out)
    assert d == {"ring_spec": "Tri 2 (Zn 2)", "order": 8, "units": 2, "center": 2,
                 "idempotents": 6, "characteristic": 2, "commutative": False}


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", "Zn 5", "--poly", "poly[0,-2,1]")
    assert code == EXIT_OK and "holds" in out


def test_check_fails_with_property_code(capsys):
    code, out, _ = run(capsys, "check", "Prod(Zn 2,Zn 2)", "--poly", "poly[#2,#1,#3]")
    assert code == EXIT_PROPERTY_FAILS
    assert "first failing element: 2 ((1,0))" in out


def test_check_plain_clean(capsys):
    code, out, _ = run(capsys, "check", "Mat 2 (Zn 3)")
    assert code == EXIT_OK and "strongly clean" in out


def test_check_witness_certificates_revalidate(capsys):
    code, out, _ = run(capsys, "check", "Tri 2 (Zn 3)", "--poly", "poly[0,1,1]",
                       "--witnesses", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["holds"] and len(d["witnesses"]) == 27
    R = parse_ring_spec(d["ring_spec"])
    for record in d["witnesses"]:
        assert all(record["checks"].values())
        assert is_valid(witness_from_dict(record, R))


def test_witness_verb(capsys):
    code, out, _ = run(capsys, "witness", "Zn 6", "3", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and (d["s"], d["u"], d["kind"]) == (4, 5, "clean")
    assert is_valid(witness_from_dict(d))
    code, out, _ = run(capsys, "witness", "Zn 5", "3", "--poly", "poly[0,-2,1]")
    assert code == EXIT_OK and "s=0, u=3" in out
    code, out, _ = run(capsys, "witness", "Zn 7", "3", "--root-of-unity", "3", "--format", "json")
    d = json.loads(out)
    assert (d["s"], d["u"], d["k"]) == (1, 2, 3) and is_valid(witness_from_dict(d))
    code, out, _ = run(capsys, "witness", "Zn 2", "1", "--root-of-unity", "2")
    assert code == EXIT_PROPERTY_FAILS and "no witness" in out


def test_witness_output_is_stable(capsys):
    argv = ("witness", "GR (Zn 2) C3", "5", "--poly", "poly[0,1,1]", "--format", "json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_suite_verb(capsys, tmp_path):
    target = tmp_path / "t41.json"
    code, out, _ = run(capsys, "suite", "T4.1", "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    (report,) = json.loads(out)
    assert report["theorem_id"] == "T4.1" and report["passed"]
    assert json.loads(target.read_text()) == json.loads(out)


def test_suite_custom_catalog_table(capsys):
    code, out, _ = run(capsys, "suite", "C2.5", "P3.5", "--catalog", "Zn 4", "Zn 6")
    assert code == EXIT_OK
    assert "C2.5" in out and "P3.5" in out and "overall: PASS" in out


def test_suite_seed_reproducible(capsys):
    argv = ("suite", "T2.4.1", "--catalog", "GR (Zn 7) C3", "--format", "json", "--seed", "5")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_hunt_verb(capsys):
    code, out, _ = run(capsys, "hunt", "--catalog", "Zn 2", "Zn 3", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert [f["ring"] for f in d["findings"]] == ["Zn 3"]
    code, out, _ = run(capsys, "hunt", "--catalog", "Zn 2")
    assert "no asymmetric instance in catalog" in out


def test_int_check(capsys):
    code, out, _ = run(capsys, "int-check", "2", "--poly", "poly[0,1,1]")
    assert code == EXIT_PROPERTY_FAILS
    assert out.strip() == "2 is not strongly (x^2 + x)-clean in Z"
    code, out, _ = run(capsys, "int-check", "2", "--poly", "poly[0,-1,1]", "--format", "json")
    assert code == EXIT_OK and json.loads(out) == {"r": 2, "poly": [0, -1, 1], "holds": True, "s": 1, "u": 1}


@pytest.mark.parametrize("argv,code", [
    (("info", "Zn 0"), 4),
    (("info", "Mat 3 (Zn 3)", "--cap", "1000"), 5),
    (("info", "Corner (Mat 2 (Zn 2)) 2"), 6),
    (("check", "Mat 2 (Zn 2)", "--poly", "poly[0,#1]"), 7),
    (("suite", "T9.9"), 10),
    (("int-check", "1", "--poly", "poly[0]"), 11),
    (("witness", "Zn 4", "9"), 4),
    (("check", "Zn 4", "--poly", "x^2"), 4),
])
def test_error_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("gxclean: error:") and err.count("\n") == 1


def test_error_codes_are_distinct_from_property_code():
    codes = {code for _, code in ERROR_CODES}
    assert EXIT_OK not in codes and EXIT_PROPERTY_FAILS not in codes and 2 not in codes
    assert exit_code_for(ParseError("x", 0)) == 4
    assert exit_code_for(RuntimeError()) == 1


def test_parse_examples():
    assert parse_ring_spec("Tri 2 (Zn 2)").order == 8
    assert parse_ring_spec("Quot (Zn 8) {4}").order == 4
    assert parse_ring_spec("Corner (Mat 2 (Zn 2)) 1").order == 2
    assert parse_ring_spec("Corner (Mat 2 (Zn 2)) 9").order == 16  # 9 is the identity
    with pytest.raises(ParseError) as exc:
        parse_ring_spec("Zn 0")
    assert exc.value.position == 3
    with pytest.raises(ParseError):
        parse_ring_spec("Zn 4 extra")
    with pytest.raises(ParseError):
        parse_ring_spec("Prod(Zn 2,")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gxclean", "int-check", "0", "--poly", "poly[0,1,1]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0 is strongly (x^2 + x)-clean in Z: 0 = -1 + 1"
