"""Command-line interface: shorthand grammar, dispatch, exit codes, formats."""

import json

import numpy as np
import pytest

from mst.blaschke import BlaschkeProduct
from mst.cli import ShorthandError, parse_shorthand, run_command
from mst.rational import RationalFn


class TestParseShorthand:
    def test_monomial_power(self):
        b = parse_shorthand("z^3")
        assert isinstance(b, BlaschkeProduct)
        assert b.zeros == (0.0, 0.0, 0.0)

    def test_blaschke_list(self):
        b = parse_shorthand("blaschke(0.5, 0.3333333333)")
        assert isinstance(b, BlaschkeProduct)
        assert abs(b.zeros[0] - 0.5) < 1e-15
        assert abs(b.zeros[1] - 0.3333333333) < 1e-15

    def test_rational_with_denominator(self):
        f = parse_shorthand("(1 + 0.8333333333z)/1")
        assert isinstance(f, RationalFn)
        assert np.allclose(f.num.coeffs, [1.0, 0.8333333333])
        assert np.allclose(f.den.coeffs, [1.0])

    def test_bare_polynomial(self):
        f = parse_shorthand("2z^2 - 0.5z + 1")
        assert np.allclose(f.num.coeffs, [1.0, -0.5, 2.0])

    def test_complex_coefficients(self):
        b = parse_shorthand("blaschke(0.3-0.2i, 0.1i)")
        assert abs(b.zeros[0] - (0.3 - 0.2j)) < 1e-15
        assert abs(b.zeros[1] - 0.1j) < 1e-15

    def test_parenthesized_complex_coefficient(self):
        f = parse_shorthand("(0.5+0.5i)z^2")
        assert np.allclose(f.num.coeffs, [0.0, 0.0, 0.5 + 0.5j])

    def test_laurent_shorthand(self):
        f = parse_shorthand("(z^2+1)/z")
        assert np.allclose(f.num.coeffs, [1.0, 0.0, 1.0])
        assert np.allclose(f.den.coeffs, [0.0, 1.0])

    def test_json_passthrough(self):
        b = parse_shorthand('{"zeros": [[0.5, 0.0]]}')
        assert isinstance(b, BlaschkeProduct)
        f = parse_shorthand('{"num": [[1.0, 0.0]], "den": [[1.0, 0.0]]}')
        assert isinstance(f, RationalFn)

    def test_errors_carry_positions(self):
        with pytest.raises(ShorthandError):
            parse_shorthand("")
        with pytest.raises(ShorthandError):
            parse_shorthand("blaschke(0.5")
        with pytest.raises(ShorthandError) as info:
            parse_shorthand("1 + $z")
        assert "position" in str(info.value)


class TestCommands:
    def test_tto_matches_known_matrix(self, capsys):
        code = run_command(
            [
                "tto",
                "--space",
                '{"zeros":[[0,0],[0,0]]}',
                "--symbol",
                '{"num":[[1,0],[0.8333333333,0]],"den":[[1,0]]}',
            ]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        entries = np.array([[complex(re, im) for re, im in row] for row in doc["entries"]])
        assert np.max(np.abs(entries - np.array([[1.0, 0.0], [0.8333333333, 1.0]]))) < 1e-12

    def test_round_trip_bit_exact(self, capsys):
        code = run_command(["tto", "--space", "z^2", "--symbol", "(1+0.1z)/(1-0.3z)"])
        assert code == 0
        text = capsys.readouterr().out
        assert json.loads(text) == json.loads(json.dumps(json.loads(text)))

    def test_dual_kernel_example(self, capsys):
        code = run_command(["dual-kernel", "--theta", "z^2", "--alpha", "z^2"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["dim"] == 1 and doc["k"] == 0
        element = doc["basis"][0]
        num = element["antianalytic"]["num"]
        den = element["antianalytic"]["den"]
        assert len(den) - len(num) == 2  # a multiple of conj(z^2)

    def test_equiv_exit_codes(self, capsys):
        argv = [
            "equiv",
            "--theta", "blaschke(0.5, 0.3333333333)",
            "--alpha", "blaschke(0.5, 0.3333333333)",
            "--eta", "z^2",
            "--gamma", "z^2",
            "--symbol", "(z^2+1)/z",
        ]
        assert run_command(argv) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["residual"] < 1e-9
        # an absurdly tight tolerance flips the exit code to 2
        assert run_command(argv + ["--tol", "1e-30"]) == 2

    def test_wh_inverse(self, capsys):
        code = run_command(
            ["wh-inverse", "--n", "2", "--symbol", "1 + 0.8333333333z", "--rhs", "1"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        sol = doc["solution"]["num"]
        assert abs(sol[0][0] - 1.0) < 1e-9 and abs(sol[1][0] + 0.8333333333) < 1e-9

    def test_wh_inverse_singular(self, capsys):
        code = run_command(["wh-inverse", "--n", "1", "--symbol", "0"])
        assert code == 2
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "no-canonical-factorization"

    def test_crofoot(self, capsys):
        code = run_command(["crofoot", "--space", "z^2", "--w", "0.4"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["gram_residual"] < 1e-9
        assert doc["zero_symbol_check"] is True

    def test_conjugation_check(self, capsys):
        code = run_command(
            ["conjugation-check", "--space", "blaschke(0.5,0.3333333333)", "--symbol", "(z^2+1)/z"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["selfadjoint"] is True

    def test_rank_equiv(self, capsys):
        a = json.dumps({"entries": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]})
        b = json.dumps({"entries": [[[0, 0], [0, 0]], [[0, 0], [2, 0]]]})
        assert run_command(["rank-equiv", "--a", a, "--b", b]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["equivalent"] is True and doc["residual"] < 1e-10
        c = json.dumps({"entries": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})
        assert run_command(["rank-equiv", "--a", a, "--b", c]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["equivalent"] is False

    def test_verify_suite(self, capsys):
        code = run_command(["verify", "--suite", "wh", "--format", "csv"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("suite,check,residual")

    def test_malformed_json_diagnostic(self, capsys):
        code = run_command(["tto", "--space", '{"zeros": [[0,0],', "--symbol", "1"])
        assert code == 1
        err = capsys.readouterr().err
        assert "line" in err and "column" in err

    def test_unknown_field_rejected(self, capsys):
        code = run_command(
            ["tto", "--space", '{"zeros": [], "spin": 1}', "--symbol", "1"]
        )
        assert code == 1

    def test_circle_pole_rejected(self, capsys):
        code = run_command(["tto", "--space", "z^2", "--symbol", "1/(1-z)"])
        assert code == 1

    def test_env_tolerance(self, capsys, monkeypatch):
        argv = [
            "equiv",
            "--theta", "blaschke(0.5, 0.3333333333)",
            "--alpha", "blaschke(0.5, 0.3333333333)",
            "--eta", "z^2",
            "--gamma", "z^2",
            "--symbol", "(z^2+1)/z",
        ]
        monkeypatch.setenv("MST_TOL", "1e-30")
        assert run_command(argv) == 2
        capsys.readouterr()
        monkeypatch.setenv("MST_TOL", "1e-6")
        assert run_command(argv) == 0

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "matrix.json"
        code = run_command(
            ["tto", "--space", "z^2", "--symbol", "1", "--out", str(target)]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        doc = json.loads(target.read_text())
        assert doc["rows"] == 2

    def test_csv_matrix(self, capsys):
        code = run_command(["tto", "--space", "z^2", "--symbol", "z", "--format", "csv"])
        assert code == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "0.0+0.0i,0.0+0.0i"
        assert lines[1] == "1.0+0.0i,0.0+0.0i"
