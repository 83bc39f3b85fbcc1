"""CLI dispatch, output formats, and exit-status contract."""

import json

import pytest

import neckprod.verify
from neckprod.cli import run
from neckprod.verify import SymbolicReport


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_necklace_count(self, capsys):
        code, out, err = invoke(capsys, ["necklace", "--a", "2", "--n", "4"])
        assert (code, out, err) == (0, "3\n", "")

    def test_mobius(self, capsys):
        code, out, _ = invoke(capsys, ["mobius", "--n", "30"])
        assert (code, out) == (0, "-1\n")

    def test_necklace_table(self, capsys):
        code, out, _ = invoke(capsys, ["necklace", "table", "--a", "3", "--degree", "3"])
        assert code == 0
        assert out.splitlines() == ["1\t3", "2\t3", "3\t8"]

    def test_expand_necklace(self, capsys):
        code, out, _ = invoke(capsys, ["expand", "--a", "2", "--degree", "8"])
        assert code == 0
        assert out.strip() == "1 -2 0 0 0 0 0 0 0"

    def test_expand_methods_agree(self, capsys):
        _, recursive, _ = invoke(capsys, ["expand", "--a", "3", "--degree", "12"])
        _, direct, _ = invoke(
            capsys, ["expand", "--a", "3", "--degree", "12", "--method", "direct"]
        )
        assert recursive == direct

    def test_expand_raw(self, capsys):
        code, out, _ = invoke(
            capsys, ["expand", "raw", "--exponents", "1,1,1,1,1", "--method", "direct"]
        )
        assert code == 0
        assert out.strip() == "1 -1 -1 0 0 1"

    def test_field_count(self, capsys):
        code, out, _ = invoke(capsys, ["field", "count", "--p", "2", "--k", "2", "--n", "2"])
        assert (code, out) == (0, "6\n")

    def test_field_count_trial(self, capsys):
        code, out, _ = invoke(
            capsys,
            ["field", "count", "--p", "2", "--k", "1", "--n", "4", "--test", "trial"],
        )
        assert (code, out) == (0, "3\n")

    def test_verify_symbolic_text(self, capsys):
        code, out, _ = invoke(capsys, ["verify", "symbolic", "--a", "2", "--degree", "16"])
        assert code == 0
        assert "pass" in out and "true" in out

    def test_verify_numeric(self, capsys):
        code, out, _ = invoke(
            capsys, ["verify", "numeric", "--a", "2", "--z", "0.25,0", "--degree", "40"]
        )
        assert code == 0
        assert "residual" in out

    def test_verify_bridge(self, capsys):
        code, out, _ = invoke(capsys, ["verify", "bridge", "--p", "5", "--k", "1", "--n-max", "1"])
        assert code == 0
        assert "pass: true" in out


class TestJsonOutput:
    @pytest.mark.parametrize(
        "argv,schema",
        [
            (["mobius", "--n", "12"], "mobius"),
            (["necklace", "--a", "2", "--n", "4"], "necklace.count"),
            (["necklace", "table", "--a", "2", "--degree", "4"], "necklace.table"),
            (["expand", "--a", "2", "--degree", "6"], "series.expand"),
            (["expand", "raw", "--exponents", "1,0,-2"], "series.expand"),
            (["field", "count", "--p", "3", "--k", "1", "--n", "3"], "field.count"),
            (["verify", "symbolic", "--a", "2", "--degree", "8"], "verify.symbolic"),
            (["verify", "numeric", "--a", "2", "--z", "0.1,0.1", "--degree", "16"], "verify.numeric"),
            (["verify", "bridge", "--p", "2", "--k", "1", "--n-max", "4"], "verify.bridge"),
        ],
    )
    def test_round_trips_with_schema(self, capsys, argv, schema):
        code, out, _ = invoke(capsys, argv + ["--json"])
        assert code == 0
        parsed = json.loads(out)
        assert parsed["schema"] == schema

    def test_exact_integers_are_strings(self, capsys):
        _, out, _ = invoke(capsys, ["necklace", "--a", "10", "--n", "25", "--json"])
        value = json.loads(out)["value"]
        assert isinstance(value, str)
        assert int(value) == (10**25 - 10**5) // 25

    def test_deterministic_bytes(self, capsys):
        argv = ["verify", "symbolic", "--a", "5", "--degree", "24", "--json"]
        _, first, _ = invoke(capsys, argv)
        _, second, _ = invoke(capsys, argv)
        assert first == second

    def test_worker_count_does_not_affect_output(self, capsys):
        base = ["field", "count", "--p", "2", "--k", "1", "--n", "9", "--json"]
        _, solo, _ = invoke(capsys, base + ["--workers", "1"])
        _, duo, _ = invoke(capsys, base + ["--workers", "2"])
        assert solo == duo


class TestExitStatus:
    def test_usage_error_unknown_command(self, capsys):
        code, _, err = invoke(capsys, ["frobnicate"])
        assert code == 2
        assert err

    def test_usage_error_missing_flag(self, capsys):
        code, _, err = invoke(capsys, ["mobius"])
        assert code == 2
        assert "usage" in err

    def test_usage_error_bad_a(self, capsys):
        code, _, err = invoke(capsys, ["verify", "symbolic", "--a", "0", "--degree", "8"])
        assert code == 2
        assert "a >= 1" in err

    def test_usage_error_necklace_without_n(self, capsys):
        code, _, err = invoke(capsys, ["necklace", "--a", "2"])
        assert code == 2
        assert "requires" in err

    def test_usage_error_malformed_z(self, capsys):
        code, _, err = invoke(capsys, ["verify", "numeric", "--a", "2", "--z", "0.5", "--degree", "8"])
        assert code == 2
        assert "RE,IM" in err

    def test_usage_error_malformed_exponents(self, capsys):
        code, _, err = invoke(capsys, ["expand", "raw", "--exponents", "1,x,3"])
        assert code == 2

    def test_usage_error_outside_regime(self, capsys):
        code, _, err = invoke(capsys, ["verify", "numeric", "--a", "3", "--z", "0.5,0", "--degree", "8"])
        assert code == 2
        assert "1/a" in err

    def test_budget_refusal_is_usage_error(self, capsys):
        code, _, err = invoke(
            capsys,
            ["field", "count", "--p", "2", "--k", "1", "--n", "20", "--budget", "1000"],
        )
        assert code == 2
        assert "budget" in err

    def test_bad_worker_count(self, capsys):
        code, _, err = invoke(
            capsys,
            ["field", "count", "--p", "2", "--k", "1", "--n", "3", "--workers", "0"],
        )
        assert code == 2

    def test_verification_failure_exits_one(self, capsys, monkeypatch):
        # the identity genuinely holds, so force a failing report through the
        # dispatch layer to pin down the exit-status contract
        failing = SymbolicReport(
            base=2, degree_bound=8, passed=False, first_failure=(1, -2, -3)
        )
        monkeypatch.setattr(neckprod.verify, "verify_symbolic", lambda *a, **k: failing)
        code, out, _ = invoke(capsys, ["verify", "symbolic", "--a", "2", "--degree", "8"])
        assert code == 1
        assert "false" in out

    def test_quiet_suppresses_stdout(self, capsys):
        code, out, _ = invoke(capsys, ["verify", "symbolic", "--a", "2", "--degree", "8", "--quiet"])
        assert code == 0
        assert out == ""

    def test_quiet_keeps_failure_status(self, capsys, monkeypatch):
        failing = SymbolicReport(
            base=2, degree_bound=8, passed=False, first_failure=(1, -2, -3)
        )
        monkeypatch.setattr(neckprod.verify, "verify_symbolic", lambda *a, **k: failing)
        code, out, _ = invoke(capsys, ["verify", "symbolic", "--a", "2", "--degree", "8", "--quiet"])
        assert (code, out) == (1, "")
