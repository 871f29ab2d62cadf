"""Tests for the rframe commands and their exit codes."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from config.settings import settings
from main import cli

DERIVATIONS = Path(__file__).parent.parent.parent / "data" / "derivations"


@pytest.fixture
def runner():
    return CliRunner()


def structured(result) -> list[dict]:
    """JSON records printed with --format structured."""
    return [json.loads(line) for line in result.output.splitlines() if line.startswith("{")]


class TestEntails:
    """Tests for the entails command."""

    def test_holds(self, runner):
        """Test D(1) <= D(2, 3) over Z/6 exits 0 with a certificate."""
        result = runner.invoke(cli, ["entails", "--ring", "Z/6", "D(1)", "D(2),D(3)", "--format", "structured"])
        assert result.exit_code == 0
        record = structured(result)[0]
        assert record["holds"] is True
        assert record["kind"] == "leq"

    def test_fails_with_separating_filter(self, runner):
        """Test D(2) <= D(3) fails over Z/6."""
        result = runner.invoke(cli, ["entails", "--ring", "Z/6", "D(2)", "D(3)", "--format", "structured"])
        assert result.exit_code == 1
        assert structured(result)[0]["separating_filter"] == [1, 2, 4, 5]

    def test_pretty_output(self, runner):
        """Test the pretty rendering names both opens."""
        result = runner.invoke(cli, ["entails", "--ring", "Z/6", "D(1)", "D(2),D(3)"])
        assert result.exit_code == 0
        assert "D(2, 3)" in result.output

    def test_malformed_ring(self, runner):
        """Test an unreadable ring is an input error."""
        result = runner.invoke(cli, ["entails", "--ring", "Z/x", "D(1)", "D(2)"])
        assert result.exit_code == 3

    def test_exhausted_exponent_cap(self, runner, mocker):
        """Test a cap below the analytic bound exits 2 instead of 1."""
        mocker.patch.object(settings.search, "exponent_cap", 1)
        result = runner.invoke(cli, ["entails", "--ring", "Z/8", "D(2)", "D(0)"])
        assert result.exit_code == 2


class TestForce:
    """Tests for the force and truth-open commands."""

    def test_false_at_unit(self, runner):
        """Test 1 does not force false over Z."""
        result = runner.invoke(cli, ["force", "--ring", "Z", "--at", "1", "false"])
        assert result.exit_code == 1

    def test_false_at_nilpotent(self, runner):
        """Test a nilpotent element forces false."""
        result = runner.invoke(cli, ["force", "--ring", "Z/4", "--at", "2", "false", "--format", "structured"])
        assert result.exit_code == 0
        assert structured(result)[0]["nilpotency_exponent"] == 2

    def test_unknown_universal(self, runner):
        """Test a universal quantifier over Z is left undecided."""
        result = runner.invoke(cli, ["force", "--ring", "Z", "forall x. D(x)"])
        assert result.exit_code == 2

    def test_syntax_error(self, runner):
        """Test a malformed formula is an input error."""
        result = runner.invoke(cli, ["force", "--ring", "Z/6", "D(2) |"])
        assert result.exit_code == 3

    def test_truth_open_check(self, runner):
        """Test the compiled truth open agrees with the literal clauses."""
        result = runner.invoke(
            cli, ["truth-open", "--ring", "Z/12", "--check", "not D(2) | D(3)", "--format", "structured"]
        )
        assert result.exit_code == 0
        assert structured(result)[0]["agrees"] is True

    def test_nabla_translate(self, runner):
        """Test the translation of a disjunction."""
        result = runner.invoke(cli, ["nabla-translate", "D(2) | D(3)", "--format", "structured"])
        assert result.exit_code == 0
        assert "nabla" in structured(result)[0]["translation"]


class TestProofs:
    """Tests for prove and check-derivation."""

    def test_check_golden_derivation(self, runner):
        """Test a stored derivation is accepted."""
        result = runner.invoke(cli, ["check-derivation", str(DERIVATIONS / "and_commute.yaml")])
        assert result.exit_code == 0

    def test_geometric_calculus_rejects_implication(self, runner):
        """Test implication rules are outside the geometric calculus."""
        result = runner.invoke(
            cli,
            ["check-derivation", str(DERIVATIONS / "weakening_implication.yaml"), "--calculus", "geometric"],
        )
        assert result.exit_code == 1

    def test_prove_and_recheck(self, runner, tmp_path):
        """Test a proof written by prove is accepted by check-derivation."""
        out = tmp_path / "proof.yaml"
        result = runner.invoke(cli, ["prove", "--ring", "Z/6", "D(1) |- D(2) | D(3)", "--out", str(out)])
        assert result.exit_code == 0
        assert out.exists()

        checked = runner.invoke(
            cli,
            ["check-derivation", str(out), "--ring", "Z/6", "--prime-filter-axioms", "--calculus", "geometric"],
        )
        assert checked.exit_code == 0

    def test_unprovable(self, runner):
        """Test an unprovable sequent reports a saturated branch."""
        result = runner.invoke(cli, ["prove", "--ring", "Z/6", "D(2) |- D(3)", "--format", "structured"])
        assert result.exit_code == 1
        assert "D(2)" in structured(result)[0]["failing_branch"]

    def test_filters(self, runner):
        """Test the prime filters of Z/6."""
        result = runner.invoke(cli, ["filters", "--ring", "Z/6", "--format", "structured"])
        assert result.exit_code == 0
        assert sorted(structured(result)[0]["prime_ideals"]) == [[0, 2, 4], [0, 3]]


class TestMatrixCommands:
    """Tests for mccoy, richman and generic-freeness."""

    def test_mccoy_regular(self, runner):
        """Test [2; 3] has regular maximal minors over Z/6."""
        result = runner.invoke(cli, ["mccoy", "--ring", "Z/6", "2; 3"])
        assert result.exit_code == 0

    def test_mccoy_not_regular(self, runner):
        """Test [2] over Z/6 is not regular."""
        result = runner.invoke(cli, ["mccoy", "--ring", "Z/6", "2"])
        assert result.exit_code == 1

    def test_richman_kernel(self, runner):
        """Test a wide matrix over Z/6 with a kernel vector."""
        result = runner.invoke(cli, ["richman", "--ring", "Z/6", "2 3"])
        assert result.exit_code == 1

    def test_richman_trivial_ring(self, runner):
        """Test a wide matrix over Z/1 proves 1 = 0."""
        result = runner.invoke(cli, ["richman", "--ring", "Z/1", "0 0"])
        assert result.exit_code == 0

    def test_generic_freeness(self, runner):
        """Test the torsion module Z/6 / (2)."""
        result = runner.invoke(cli, ["generic-freeness", "--ring", "Z/6", "2"])
        assert result.exit_code == 0

    def test_generic_freeness_non_reduced(self, runner):
        """Test Z/4 is refused as unknown."""
        result = runner.invoke(cli, ["generic-freeness", "--ring", "Z/4", "2"])
        assert result.exit_code == 2


class TestVerifyCertificate:
    """Tests for re-verifying structured records."""

    def test_leq_round_trip(self, runner, tmp_path):
        """Test an entails record verifies after being written to disk."""
        result = runner.invoke(cli, ["entails", "--ring", "Z/12", "D(6)", "D(2)", "--format", "structured"])
        assert result.exit_code == 0
        path = tmp_path / "leq.jsonl"
        path.write_text("\n".join(json.dumps(r) for r in structured(result)))

        verified = runner.invoke(cli, ["verify-certificate", str(path)])
        assert verified.exit_code == 0

    def test_forcing_round_trip(self, runner, tmp_path):
        """Test a forcing certificate verifies after being written to disk."""
        result = runner.invoke(
            cli, ["force", "--ring", "Z/6", "--certificate", "D(2) | D(3)", "--format", "structured"]
        )
        assert result.exit_code == 0
        path = tmp_path / "forcing.jsonl"
        path.write_text("\n".join(json.dumps(r) for r in structured(result)))

        verified = runner.invoke(cli, ["verify-certificate", str(path)])
        assert verified.exit_code == 0

    def test_rejected_certificate(self, runner, mocker):
        """Test a forcing certificate that fails its own check is a negative answer."""
        mocker.patch("main.check_forcing_certificate", return_value=False)
        result = runner.invoke(cli, ["force", "--ring", "Z/6", "--certificate", "D(2) | D(3)"])
        assert result.exit_code == 1

    def test_unknown_kind(self, runner, tmp_path):
        """Test an unknown record kind is an input error."""
        path = tmp_path / "bad.yaml"
        path.write_text("kind: nonsense\n")
        result = runner.invoke(cli, ["verify-certificate", str(path)])
        assert result.exit_code == 3


class TestSelftest:
    """Tests for the selftest command."""

    def test_field_suite(self, runner):
        """Test a single suite runs and passes."""
        result = runner.invoke(cli, ["selftest", "--suite", "field", "--format", "structured"])
        assert result.exit_code == 0
        records = structured(result)
        assert [r["suite"] for r in records] == ["field"]
        assert records[0]["success"]

    def test_unknown_suite(self, runner):
        """Test an unknown suite name is an input error."""
        result = runner.invoke(cli, ["selftest", "--suite", "nope"])
        assert result.exit_code == 3
