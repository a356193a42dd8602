import io
import json
import subprocess
import sys

import pytest

from genfun.cli import EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, config_from_args, main
from genfun.errors import ParseError

XHP = ["--ring", "polyx", "--prefactor", "2*x^2*z^2 - 4*x*z + z^2 + 4", "--exponent", "x*z - z^2/4"]
NUMERIC = ["--prefactor", "z - 1", "--exponent", "z"]
XHP_WEIGHT = "num=1;den=(x^2+1/2)^2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "--op", "d^2 - 2*z^-1*d^1")
    assert code == EXIT_OK and out.strip() == "(n^2+n-2)*S^2"


def test_translate_json(capsys):
    code, out, _ = run(capsys, "translate", "--op", "z^1*d^1", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["text"] == "n"


def test_translate_empty_is_usage_error(capsys):
    code, _, err = run(capsys, "translate", "--op", "")
    assert code == EXIT_USAGE and "error" in err


def test_nonconstant_coefficient_exit(capsys):
    code, _, _ = run(capsys, "translate", "--ring", "polyx", "--op", "x*d")
    assert code == EXIT_USAGE


def test_bad_ring(capsys):
    code, _, _ = run(capsys, "translate", "--ring", "quaternion", "--op", "d")
    assert code == EXIT_USAGE


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["translate"])
    assert info.value.code == 2


def test_series(capsys):
    code, out, _ = run(capsys, "series", *NUMERIC, "--order", "5")
    assert code == 0
    assert out.splitlines() == ["z^0: -1", "z^1: 0", "z^2: 1/2", "z^3: 1/3", "z^4: 1/8", "z^5: 1/30"]


def test_series_json_schema(capsys):
    code, out, _ = run(capsys, "series", *XHP, "--order", "4", "--json")
    payload = json.loads(out)
    assert set(payload) == {"lo", "order", "coeffs"}
    assert payload["coeffs"][3] == "2/3*x^3 + x"


def test_series_constant_in_exponent(capsys):
    code, _, _ = run(capsys, "series", "--prefactor", "1", "--exponent", "1 + z", "--order", "3")
    assert code == EXIT_DOMAIN


def test_apply_delta(capsys):
    code, out, _ = run(capsys, "apply", *NUMERIC, "--order", "6", "--delta", "(n^2+n-2)*S^2", "--nmax", "2")
    assert code == 0 and out.splitlines() == ["n=0: -1", "n=1: 0", "n=2: 1/2"]


def test_apply_diffop(capsys):
    code, out, _ = run(capsys, "apply", *NUMERIC, "--order", "6", "--op", "z*d")
    assert code == 0 and out.splitlines()[:2] == ["z^1: 0", "z^2: 1"]


def test_verify_eigen(capsys):
    code, out, _ = run(capsys, "verify-eigen", *XHP, "--order", "14",
                       "--op", "d^3 + (3/2)*z*d^2 - 6*z^-1*d^2 + (3/4)*z^2*d - 3*d + 12*z^-2*d + (1/8)*z^3",
                       "--lambda", "x^3 + 3/2*x")
    assert code == EXIT_OK and out.count("holds") == 2


def test_verify_eigen_matrix_both_sides(capsys):
    op = ("d^3 - 3*z^-1*d^2 + [[3, 0], [0, 6]]*z^-2*d + [[0, 3], [0, 0]]*d"
          " + [[0, 0], [0, -6]]*z^-3 + [[0, -6], [0, 0]]*z^-1")
    code, out, _ = run(capsys, "verify-eigen", "--ring", "matrix:2",
                       "--prefactor", "[[x*z - 1, -z^2], [0, x*z]]", "--exponent", "x*z",
                       "--order", "12", "--op", op, "--lambda", "x^3", "--side", "both", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["holds"] and len(payload["reports"]) == 2


def test_verify_eigen_failure(capsys):
    code, out, _ = run(capsys, "verify-eigen", *NUMERIC, "--order", "10",
                       "--op", "d^2 - 2*z^-1*d", "--lambda", "2")
    assert code == EXIT_FAIL and "FAILS" in out


def test_verify_lemma1(capsys):
    code, out, _ = run(capsys, "verify-lemma1", *NUMERIC, "--order", "10", "--op", "d^2 - 2*z^-1*d + z^-3")
    assert code == 0 and out.startswith("coefficientwise identity on -3..7: holds")


def test_gram_example(capsys):
    code, out, _ = run(capsys, "gram", "--example", "xhp", "--max-n", "8", "--tol", "1e-8")
    assert code == EXIT_OK and out.rstrip().endswith("orthogonal")


def test_gram_series_with_weight(capsys):
    code, out, _ = run(capsys, "gram", *XHP, "--max-n", "6", "--weight", XHP_WEIGHT, "--json", "--workers", "2")
    payload = json.loads(out)
    assert code == 0 and payload["orthogonal"] and payload["verdict_kind"] == "numerical"


def test_gram_not_orthogonal_exit(capsys):
    code, out, _ = run(capsys, "gram", "--ring", "polyx", "--prefactor", "1", "--exponent", "x*z - z^2/4",
                       "--max-n", "4", "--weight", XHP_WEIGHT)
    assert code == EXIT_FAIL and "NOT orthogonal" in out


def test_gram_needs_input(capsys):
    code, _, _ = run(capsys, "gram", "--max-n", "3")
    assert code == EXIT_USAGE


def test_gram_bad_weight(capsys):
    code, _, _ = run(capsys, "gram", "--example", "xhp", "--weight", "num=1;den=x^2-1")
    assert code == EXIT_DOMAIN


@pytest.mark.parametrize("name", ["numeric", "xhp", "matrix"])
def test_demo(capsys, name):
    code, out, _ = run(capsys, "demo", name, "--order", "14")
    assert code == EXIT_OK and "FAIL" not in out


def test_demo_json(capsys):
    code, out, _ = run(capsys, "demo", "matrix", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["passed"] and all(c["passed"] for c in payload["claims"])


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("d^2 - 2*z^-1*d^1\n"))
    code, out, _ = run(capsys, "translate", "--op", "-")
    assert code == 0 and out.strip() == "(n^2+n-2)*S^2"


def test_deterministic_output(capsys):
    argv = ["gram", "--example", "xhp", "--max-n", "6", "--json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    argv = ["demo", "xhp"]
    assert run(capsys, *argv) == run(capsys, *argv)


def test_config_validation():
    p = build_parser()
    with pytest.raises(ParseError):
        config_from_args(p.parse_args(["gram", "--example", "xhp", "--tol", "0"]))
    with pytest.raises(ParseError):
        config_from_args(p.parse_args(["verify-lemma1", "--prefactor", "1", "--order", "0", "--op", "d"]))
    cfg = config_from_args(p.parse_args(["translate", "--ring", "matrix:3", "--op", "d"]))
    assert cfg.ring.dim == 3 and not cfg.json


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "genfun", "translate", "--op", "z^1*d^1"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "n"
