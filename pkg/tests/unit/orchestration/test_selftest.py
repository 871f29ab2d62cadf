"""Tests for the selftest runner."""

import random

from config.settings import settings
from src.logic import Eq, Exists, Fragment, classify
from src.orchestration import SelftestRunner, inv, random_formula


class TestRandomFormula:
    """Tests for the random formula generator."""

    def test_reproducible(self):
        """Test the same seed gives the same formula."""
        assert random_formula(random.Random(7), 6, 3) == random_formula(random.Random(7), 6, 3)

    def test_connectives(self):
        """Test restricting connectives keeps formulas geometric."""
        rng = random.Random(1)
        for _ in range(50):
            phi = random_formula(rng, 6, 3, connectives=("and", "or"), with_inv=False)
            assert classify(phi) != Fragment.FIRST_ORDER

    def test_inv(self):
        """Test inv(c) is the existential invertibility formula."""
        phi = inv(5)
        assert isinstance(phi, Exists)
        assert isinstance(phi.body, Eq)


class TestSelftestRunner:
    """Tests for suite selection and failure reporting."""

    def test_consistency_suite(self):
        """Test 1 forces false only in the trivial rings of the corpus."""
        runner = SelftestRunner(settings, corpus={"consistency": {"rings": ["Z/1", "Z/6", "Z"]}})
        (stats,) = runner.run(["consistency"])
        assert stats.success
        assert stats.checks == 3

    def test_crashing_suite_is_reported(self, mocker):
        """Test an exception inside a suite marks it failed with the message."""
        runner = SelftestRunner(settings, corpus={})
        mocker.patch.dict(runner.suites, {"field": mocker.Mock(side_effect=RuntimeError("boom"))})
        (stats,) = runner.run(["field"])
        assert not stats.success
        assert stats.error_message == "boom"
        assert stats.checks == 0

    def test_failures_are_collected(self, mocker):
        """Test reported disagreements fail the suite."""
        runner = SelftestRunner(settings, corpus={})
        mocker.patch.dict(runner.suites, {"nabla": mocker.Mock(return_value=(4, ["Z/4: mismatch"]))})
        (stats,) = runner.run(["nabla"])
        assert not stats.success
        assert stats.failures == ["Z/4: mismatch"]

    def test_corpus_overrides_defaults(self):
        """Test a given corpus is merged over the built-in one."""
        runner = SelftestRunner(settings, corpus={"richman": {"moduli": [1], "samples": 1}})
        assert runner.corpus["richman"] == {"moduli": [1], "samples": 1}
        assert "entailment" in runner.corpus
