import json

import pytest

from SturmLiouville.Cli.main import main
from SturmLiouville.Cli.Commands import EXIT_ERROR, EXIT_INADMISSIBLE, EXIT_OK, OperatorSpec, cmd_classify, \
    cmd_highorder, cmd_polys
from SturmLiouville.Cli.Report import rational


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_rational_text():
    assert rational(0) == "0/1"
    assert rational(5) == "5/1"
    assert rational("-2/4") == "-1/2"


def test_classify_legendre(capsys):
    code, report = run_json(capsys, "classify", "--family", "legendre")
    assert code == EXIT_OK
    assert report["schemaVersion"] == 1
    assert report["command"] == "classify"
    assert report["input"] == {"family": "legendre"}
    rec = report["classification"]
    assert (rec["case"], rec["mode"], rec["admissible"]) == ("CaseI", "StrictWeight", True)
    assert rec["interval"] == {"lo": "-1/1", "hi": "1/1", "loOpen": False, "hiOpen": False, "display": "[-1, 1]"}
    assert (rec["alpha"], rec["beta"]) == ("-2/1", "0/1")
    assert rec["weight"]["display"] == "1"
    assert rec["normFinite"] is True
    assert rec["eigenvalues"]["fallingFactorial"] == ["0/1", "-2/1", "-1/1"]
    assert rec["eigenvalues"]["expanded"]["text"] == "-n^2 - n"


def test_classify_from_expressions(capsys):
    code, report = run_json(capsys, "classify", "--a", "1-x^2", "--b=-x")
    assert code == EXIT_OK
    assert report["classification"]["mode"] == "InessentialSingularity"
    assert report["classification"]["interval"]["display"] == "(-1, 1)"
    assert report["classification"]["weight"]["powerFactors"] == [{"root": "-1/1", "exponent": "-1/2"},
                                                                  {"root": "1/1", "exponent": "-1/2"}]


def test_classify_not_admissible_exits_with_two(capsys):
    code, report = run_json(capsys, "classify", "--a", "x^2", "--b", "x+1")
    assert code == EXIT_INADMISSIBLE
    assert report["classification"]["mode"] == "Vacuous"
    code, report = run_json(capsys, "classify", "--a", "1+x^2", "--b", "x")
    assert code == EXIT_INADMISSIBLE
    assert report["classification"]["case"] == "NoRealRoots"
    assert report["classification"]["interval"] is None


def test_syntax_error_report(capsys):
    code = main(["classify", "--a", "1-x^", "--json"])
    captured = capsys.readouterr()
    assert code == EXIT_ERROR
    error = json.loads(captured.out)["error"]
    assert error["type"] == "ExpressionSyntaxError"
    assert error["position"] == 4
    assert captured.err.startswith("error:")


def test_non_ascii_digit_is_a_syntax_error(capsys):
    code = main(["classify", "--a", "1-x^2", "--b", "x^²", "--json"])
    assert code == EXIT_ERROR
    error = json.loads(capsys.readouterr().out)["error"]
    assert error["type"] == "ExpressionSyntaxError"
    assert error["position"] == 2


def test_missing_operator_is_an_error(capsys):
    assert main(["classify"]) == EXIT_ERROR
    assert "error:" in capsys.readouterr().err


def test_weight_command(capsys):
    code, report = run_json(capsys, "weight", "--a", "x^2", "--b", "1")
    assert code == EXIT_OK
    assert report["finiteness"] == [{"root": "0/1", "left": "Infinite", "right": "ZeroLimit"}]
    assert report["decay"] == {"+inf": False, "-inf": False}
    code, report = run_json(capsys, "weight", "--a", "(1-x^2)^2", "--b=-8*x*(1-x^2)", "--order", "4")
    assert report["weight"]["display"] == "1"
    assert report["input"]["order"] == 4


def test_polys_command(capsys, tmp_path):
    csv = tmp_path / "polys.csv"
    code, report = run_json(capsys, "polys", "--family", "laguerre", "--n-max", "2", "--plot-csv", str(csv))
    assert code == EXIT_OK
    pairs = report["eigenpolynomials"]
    assert [pair["eigenvalue"] for pair in pairs] == ["0/1", "-1/1", "-2/1"]
    assert pairs[2]["polynomial"] == {"text": "x^2 - 4*x + 2", "coefficients": ["2/1", "-4/1", "1/1"]}
    lines = csv.read_text().splitlines()
    assert lines[0] == "x,P_0,P_1,P_2"
    assert len(lines) == 202
    assert lines[1] == "0,1,-1,2"


def test_polys_not_admissible():
    report, code = cmd_polys(OperatorSpec(a="x^2", b="x+1"), 3)
    assert code == EXIT_INADMISSIBLE
    assert "eigenpolynomials" not in report


def test_gram_command(capsys):
    code, report = run_json(capsys, "gram", "--family", "legendre", "--n-max", "2")
    assert code == EXIT_OK
    gram = report["gram"]
    assert gram["diagonal"] == ["1/1", "1/3", "4/45"]
    assert gram["entries"][0][2] == "0/1"
    assert gram["isDiagonal"] and gram["isSymmetric"]
    assert "numeric" not in report


def test_gram_numeric(capsys):
    code, report = run_json(capsys, "gram", "--family", "hermite", "--n-max", "2", "--numeric")
    assert code == EXIT_OK
    assert report["numeric"]["passed"] is True
    assert report["numeric"]["values"][2][2] == pytest.approx(0.5, abs=1e-9)


def test_gram_jacobi_parameters(capsys):
    code, report = run_json(capsys, "gram", "--family", "jacobi", "--alpha=-4", "--beta", "0", "--n-max", "1")
    assert code == EXIT_OK
    assert report["gram"]["diagonal"] == ["1/1", "1/5"]


def test_highorder_example(capsys):
    code, report = run_json(capsys, "highorder", "--example-4th")
    assert code == EXIT_OK
    assert report["order"] == 4
    assert report["consistent"] is True
    assert report["derived"]["linkage"] == "a2' - a1 = 24*x"
    assert [e["eigenvalue"] for e in report["eigenvalues"]] == \
        ["0/1", "-24/1", "-48/1", "-24/1", "120/1", "480/1", "1176/1"]
    assert [d["n"] for d in report["discrepancy"]["differences"]] == [0, 2, 3, 4, 5, 6]
    assert report["boundary"]["swapSign"] == -1
    assert report["boundary"]["vanishes"] is True


def test_highorder_family_member_fails_boundary(capsys):
    code, report = run_json(capsys, "highorder", "--a4", "(1-x^2)^2", "--a2", "x^2")
    assert code == EXIT_INADMISSIBLE
    assert report["derived"]["a1"]["text"] == "-22*x"
    assert report["consistent"] is True
    assert report["boundary"]["witness"] == {"i": 0, "j": 2, "difference": "-28/1"}


def test_highorder_derivation_only():
    report, code = cmd_highorder(OperatorSpec(a4="(1-x^2)^2"))
    assert code == EXIT_OK
    assert report["derived"]["a3"]["text"] == "8*x^3 - 8*x"
    assert "residuals" not in report


def test_highorder_order3():
    report, code = cmd_highorder(OperatorSpec(a3="1", a1="x"))
    assert report["order"] == 3
    assert report["derived"]["a0"]["text"] == "1/2"
    assert report["boundary"]["swapSign"] == 1
    assert report["boundary"]["lastTerm"] == "uy"
    assert report["consistent"] is True
    assert code == EXIT_INADMISSIBLE
    assert report["boundary"]["witness"] == {"i": 0, "j": 0, "difference": "2/1"}


def test_highorder_given_coefficients_override_derived_ones():
    report, code = cmd_highorder(OperatorSpec(a3="1", a1="x", a0="0"))
    assert report["derived"]["a0"]["text"] == "0"
    assert report["consistent"] is False
    assert code == EXIT_INADMISSIBLE

    report, code = cmd_highorder(OperatorSpec(a4="(1-x^2)^2", a2="8", a1="-24*x"))
    assert report["derived"]["a1"]["text"] == "-24*x"
    assert report["consistent"] is True
    assert code == EXIT_OK


def test_highorder_needs_a_leading_coefficient(capsys):
    assert main(["highorder"]) == EXIT_ERROR


def test_text_output(capsys):
    assert main(["classify", "--family", "legendre"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "CaseI / StrictWeight on [-1, 1]" in out
    assert "weight: 1" in out


def test_json_is_deterministic(capsys, tmp_path):
    output = tmp_path / "report.json"
    main(["gram", "--family", "chebyshev", "--kind", "2", "--n-max", "3", "--json", "--output", str(output)])
    first = capsys.readouterr().out
    main(["gram", "--family", "chebyshev", "--kind", "2", "--n-max", "3", "--json"])
    second = capsys.readouterr().out
    assert first == second
    assert output.read_text() == first


def test_report_has_no_floats_outside_numeric():
    report, _ = cmd_classify(OperatorSpec(family="hermite"))

    def walk(value):
        if isinstance(value, dict):
            for item in value.values():
                walk(item)
        elif isinstance(value, list):
            for item in value:
                walk(item)
        else:
            assert not isinstance(value, float), value

    walk(report)


def test_selftest_command(capsys):
    code, report = run_json(capsys, "selftest", "--n-max", "3", "--numeric-n-max", "1", "--grid-size", "2",
                            "--n-random", "5", "--no-progress")
    assert code == EXIT_OK
    assert report["selftest"]["passed"] is True
    assert report["input"]["nRandom"] == 5


def test_selftest_inject_fault(capsys):
    code, report = run_json(capsys, "selftest", "--n-max", "3", "--numeric-n-max", "1", "--grid-size", "2",
                            "--n-random", "5", "--no-progress", "--inject-fault")
    assert code == EXIT_ERROR
    assert report["selftest"]["passed"] is False
