import io
import json

import pytest

from quatrep.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def result(*argv):
    code, out, _ = run(*argv)
    assert code == 0
    record = json.loads(out)
    assert record["schema_version"] == 1
    return record["result"]


def test_dim():
    assert result("dim", "A3", "0,1,0") == {"complex_dim": 6, "real_dim": 12}
    assert result("dim", "A1", "0")["complex_dim"] == 1
    assert result("dim", "E7", "0,0,0,0,0,0,1")["complex_dim"] == 56
    assert result("dim", "E7", "1,0,0,0,0,0,0", "--paper-labels")["complex_dim"] == 56


def test_classify():
    assert result("classify", "su(3,1)", "0,1,0")["class"] == "Quaternionic"
    assert result("classify", "sl(3,R)", "1,0")["class"] == "Real"
    r = result("classify", "su(3,1)", "1,0,0")
    assert r["class"] == "NotSelfConjugate" and r["conjugate_weight"] == [0, 0, 1]
    assert r["hrep"]["real_dim"] == 16


def test_minrep():
    r = result("minrep", "sp(2,1)")
    assert r["real_dim"] == 12 and r["nodes"] == [1]
    assert result("minrep", "e8(-24)")["real_dim"] == 992
    assert result("minrep", "su(2)")["real_dim"] == 4
    r = result("minrep", "e7(-5)", "--paper-labels")
    assert r["nodes"] == [7] and r["printed_nodes"] == [1]


def test_check():
    r = result("check", "qk", "su(3,2)")
    assert (r["outcome"], r["inequality"]) == ("NotIntegrable", "20 > 16")
    r = result("check", "qk", "sp(3,1)")
    assert r["integrable"] is True
    assert result("check", "qk", "sp(3,1)", "--compact")["outcome"] == "Integrable"
    assert result("check", "qk", "--flat", "2")["outcome"] == "Integrable"
    r = result("check", "affine-e7", "su(6,2)")
    assert (r["outcome"], r["inequality"]) == ("NotIntegrable", "112 > 74")
    assert result("check", "bound", "su(3,1)", "8")["outcome"] == "BoundSatisfiedUnresolved"
    assert result("check", "exceptional", "g2(2)")["inequality"] == "28 > 18"


def test_tables_output_is_stable():
    first = run("tables", "3", "tsv")
    assert first[0] == 0 and first == run("tables", "3", "--format", "tsv")
    assert len(first[1].splitlines()) == 25  # header plus 24 rows
    code, out, _ = run("tables", "1", "json")
    assert code == 0 and len(json.loads(out)["rows"]) == 19
    assert len(run("tables", "2", "tsv")[1].splitlines()) == 11


def test_tsv_records():
    code, out, _ = run("dim", "A3", "0,1,0", "--format", "tsv")
    assert code == 0
    assert "result.complex_dim\t6\n" in out and "query.weight\t0,1,0\n" in out


def test_catalog_round_trip(tmp_path):
    code, out, _ = run("catalog", "--format", "tsv")
    assert code == 0
    path = tmp_path / "forms.tsv"
    path.write_text(out)
    assert result("minrep", "su(3,1)", "--catalog", str(path))["real_dim"] == 12


@pytest.mark.parametrize("argv,needle", [
    (("dim", "A3", "0,x,0"), "'x' at position 2"),
    (("dim", "A3", "0,1"), "3"),
    (("dim", "Q3", "1"), "Q3"),
    (("classify", "su(3,l)", "0,1,0"), "su(3,1)"),
    (("check", "affine-e7", "su(8)"), "su(8)"),
    (("check", "bound", "su(3,1)", "6"), "multiple of 4"),
    (("minrep", "so*(8)"), "so*"),
])
def test_errors_exit_nonzero(argv, needle):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert needle in err


def test_usage_error_from_argparse(capsys):
    assert main(["tables", "7"]) == 2
