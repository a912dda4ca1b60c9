"""The command line surface: values, formats, determinism, exit codes."""

import json

from tracezero.cli import ENV_BUDGET, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCount:
    def test_binary_quartic_field(self, capsys):
        code, out, _ = run(
            capsys, "count", "--p", "2", "--r", "2", "--n", "5", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data == {
            "q": 4,
            "n": 5,
            "f_count": "31",
            "i_count": "6",
            "method": "formula",
        }

    def test_nine_element_field(self, capsys):
        code, out, _ = run(
            capsys, "count", "--p", "3", "--r", "2", "--n", "5", "--format", "json"
        )
        data = json.loads(out)
        assert code == 0
        assert (data["f_count"], data["i_count"]) == ("801", "160")

    def test_degree_one_conventions(self, capsys):
        code, out, _ = run(
            capsys, "count", "--p", "2", "--r", "2", "--n", "1", "--format", "json"
        )
        data = json.loads(out)
        assert code == 0
        assert (data["f_count"], data["i_count"]) == ("1", "1")

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "count", "--p", "2", "--r", "1", "--n", "6")
        assert code == 0
        assert "q=2 n=6" in out


class TestTable:
    def test_csv(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--p", "2", "--r", "2",
            "--n-min", "3", "--n-max", "10", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,f_count,i_count"
        got = [tuple(int(v) for v in line.split(",")) for line in lines[1:]]
        assert got == [
            (3, 7, 2), (4, 16, 0), (5, 31, 6), (6, 268, 34),
            (7, 1135, 162), (8, 4096, 480), (9, 16279, 1808), (10, 64684, 6366),
        ]

    def test_json_round_trip(self, capsys):
        from tracezero.counting import CountReport

        code, out, _ = run(
            capsys,
            "table", "--p", "3", "--r", "2",
            "--n-min", "2", "--n-max", "6", "--format", "json",
        )
        assert code == 0
        report = CountReport.from_dict(json.loads(out))
        assert [r.f_count for r in report.rows] == [9, 9, 89, 801, 6561]
        assert json.loads(out) == report.to_dict()

    def test_cross_check_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--p", "2", "--r", "1",
            "--n-min", "2", "--n-max", "8", "--cross-check", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert all(row["sources"] == ["formula", "oracle"] for row in data["rows"])


class TestVerify:
    def test_passing_run(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--p", "2", "--r", "2", "--max-n", "4"
        )
        assert code == 0
        assert "all checks passed" in out

    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--p", "5", "--r", "1", "--max-n", "3", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True

    def test_failure_exit_code(self, capsys, monkeypatch):
        import tracezero.cli as cli_mod
        from tracezero.oracle import CheckResult, VerifyReport

        def fake_verify(q, n_max, budget):
            rep = VerifyReport(q=q, n_max=n_max)
            rep.checks.append(CheckResult("element_count_formula", q, 1, "fail", "3 != 4"))
            return rep

        monkeypatch.setattr(cli_mod, "verify_all", fake_verify)
        code, out, _ = run(capsys, "verify", "--p", "2", "--r", "1", "--max-n", "1")
        assert code == 1
        assert "FAILED" in out


class TestCurveAndLpoly:
    def test_genus_one_coefficients(self, capsys):
        code, out, _ = run(capsys, "lpoly", "--p", "2", "--r", "2", "--alpha", "1")
        assert code == 0
        assert len(out.split()) == 3

    def test_genus_two_coefficients(self, capsys):
        code, out, _ = run(
            capsys,
            "lpoly", "--p", "3", "--r", "2",
            "--alpha", "2", "--beta", "1", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert len(data["coeffs"]) == 5
        assert data["coeffs"][4] == "81"

    def test_curve_counts(self, capsys):
        code, out, _ = run(
            capsys,
            "curve", "--p", "2", "--r", "1", "--alpha", "1",
            "--m-max", "2", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["counts"] == ["4", "8"]

    def test_element_digit_literals(self, capsys):
        code_a, out_a, _ = run(
            capsys, "lpoly", "--p", "2", "--r", "2", "--alpha", "0,1"
        )
        code_b, out_b, _ = run(
            capsys, "lpoly", "--p", "2", "--r", "2", "--alpha", "2"
        )
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_missing_beta_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "lpoly", "--p", "3", "--r", "2", "--alpha", "1")
        assert code == 2
        assert "beta" in err


class TestFamilyAndBound:
    def test_family_rows(self, capsys):
        code, out, _ = run(
            capsys, "family", "--p", "5", "--n", "5", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert len(data["rows"]) == 4
        assert all(len(r) == 4 for r in data["rows"])

    def test_bound_strictness(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "5", "--n", "5", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert int(data["distinct_families"]) < int(data["bound"])


class TestContracts:
    def test_byte_identical_reruns(self, capsys):
        args = ("table", "--p", "3", "--r", "2", "--n-min", "2", "--n-max", "6",
                "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_composite_characteristic_exit_two(self, capsys):
        code, _, err = run(capsys, "count", "--p", "6", "--r", "1", "--n", "2")
        assert code == 2
        assert "prime" in err

    def test_env_budget_cap(self, capsys, monkeypatch):
        # small enough to block even the curve-count seeding at m = 1
        monkeypatch.setenv(ENV_BUDGET, "5")
        code, _, err = run(capsys, "count", "--p", "3", "--r", "2", "--n", "5")
        assert code == 2
        assert "exceed" in err

    def test_formula_path_outruns_the_enumeration_cap(self, capsys, monkeypatch):
        # the closed form needs no big enumeration, so a cap that admits the
        # genus-seeding counts still lets far larger n through
        monkeypatch.setenv(ENV_BUDGET, "100")
        code, out, _ = run(
            capsys, "count", "--p", "3", "--r", "2", "--n", "40", "--format", "json"
        )
        assert code == 0
        assert int(json.loads(out)["f_count"]) > 9**37

    def test_env_budget_must_be_integral(self, capsys, monkeypatch):
        monkeypatch.setenv(ENV_BUDGET, "many")
        code, _, err = run(capsys, "count", "--p", "2", "--r", "1", "--n", "2")
        assert code == 2

    def test_internal_error_exit_three(self, capsys, monkeypatch):
        import tracezero.cli as cli_mod
        from tracezero.errors import NonIntegralError

        class Broken:
            def __init__(self, *a, **k):
                raise NonIntegralError("forced")

        monkeypatch.setattr(cli_mod, "CountEngine", Broken)
        code, _, err = run(capsys, "count", "--p", "2", "--r", "1", "--n", "2")
        assert code == 3
        assert "invariant" in err

    def test_explicit_modulus_must_be_irreducible(self, capsys):
        code, _, err = run(
            capsys,
            "count", "--p", "2", "--r", "2", "--n", "2", "--modulus", "1,0,1",
        )
        assert code == 2
