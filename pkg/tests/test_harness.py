#!/usr/bin/env python3
"""
Tests for the verification harness: registry, runner, report models, report
rendering and the command line.
"""

import json
import os
import sys

import pytest
from pydantic import ValidationError

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import main as cli
from harness import SUITES, Check, Outcome, list_suites, run_suite
from harness.registry import SuiteContext, SuiteEntry, register_suite
from models import CheckResult, CheckStatus, SuiteConfig, SuiteReport
from safety.validation import PreconditionError
from utils.response_formatter import ReportFormatter, emit_report, parse_report

EXPECTED_SUITES = {
    "cardinalities", "appendix", "jm-oracle", "um-oracle", "inclusion", "sparse", "isoterms",
    "free-tree", "hecke", "unitary", "bands", "digraphs",
}


def _toy_checks(ctx: SuiteContext):
    def boom() -> Outcome:
        raise RuntimeError("exploded")

    return [
        Check("equal", "values agree", lambda: Outcome(2, 2)),
        Check("differ", "values disagree", lambda: Outcome({"x": 1}, {"x": 2}, counterexample={"x": "a", "y": "b"}),
              params={"m": 3}),
        Check("bounded", "bounded search", lambda: Outcome(True, True, bound={"max_len": 4})),
        Check("stretch", "too slow by default", lambda: Outcome(1, 1), stretch=True),
        Check("raises", "raises inside", boom),
        Check("seeded", "seed per check", lambda: Outcome(ctx.seed_for("seeded"), ctx.seed_for("seeded"))),
    ]


@pytest.fixture
def toy_suite(monkeypatch):
    monkeypatch.setitem(SUITES, "toy", SuiteEntry("toy", "checks of every status", _toy_checks))
    return "toy"


@pytest.fixture
def small_config():
    return SuiteConfig(workers=2, samples=200, params={"digraphs": {"max_gamma": 3, "max_gamma_monoid": 2}})


class TestRegistry:
    """Suite registration and lookup."""

    def test_registered_suites(self):
        assert {entry.name for entry in list_suites()} == EXPECTED_SUITES

    def test_duplicate_registration(self):
        with pytest.raises(ValueError):
            register_suite("bands", "again")(lambda ctx: [])

    def test_unknown_suite(self):
        with pytest.raises(PreconditionError):
            run_suite("no-such-suite")

    def test_seed_for_is_stable(self):
        ctx = SuiteContext(seed=5, samples=10, params={})
        assert ctx.seed_for("a") == ctx.seed_for("a")
        assert ctx.seed_for("a") != ctx.seed_for("b")
        assert 0 <= ctx.seed_for("a") < 2 ** 32


class TestRunner:
    """Statuses, ordering and determinism."""

    def test_statuses(self, toy_suite):
        report = run_suite(toy_suite, SuiteConfig(workers=3))
        statuses = {check.check_id: check.status for check in report.checks}
        assert statuses == {
            "equal": CheckStatus.PASS,
            "differ": CheckStatus.FAIL,
            "bounded": CheckStatus.BOUNDED_PASS,
            "stretch": CheckStatus.SKIPPED,
            "raises": CheckStatus.FAIL,
            "seeded": CheckStatus.PASS,
        }
        assert [check.check_id for check in report.checks][:2] == ["equal", "differ"]
        assert "exploded" in report.checks[4].detail

    def test_run_stretch(self, toy_suite):
        report = run_suite(toy_suite, SuiteConfig(run_stretch=True))
        assert report.checks[3].status is CheckStatus.PASS

    def test_failed_and_counts(self, toy_suite):
        report = run_suite(toy_suite)
        assert [check.check_id for check in report.failed] == ["differ", "raises"]
        assert report.status_counts() == {"pass": 2, "fail": 2, "bounded-pass": 1, "skipped": 1}

    def test_deterministic_json(self, small_config):
        first = emit_report(run_suite("digraphs", small_config))
        second = emit_report(run_suite("digraphs", small_config.model_copy(update={"workers": 1})))
        assert first == second

    def test_timing_only_on_request(self, toy_suite):
        assert run_suite(toy_suite).wall_time is None
        assert run_suite(toy_suite, SuiteConfig(record_timing=True)).wall_time is not None

    def test_digraph_suite_passes(self, small_config):
        report = run_suite("digraphs", small_config)
        assert not report.failed
        assert [check.check_id for check in report.checks][:3] == ["Gamma1", "Gamma2", "Gamma3"]

    def test_jm_oracle_example(self):
        config = SuiteConfig(params={"jm-oracle": {"m": 3, "vars": 2, "len": 6}})
        report = run_suite("jm-oracle", config)
        assert [check.check_id for check in report.checks] == ["jm-C3-v2-len6"]
        assert report.checks[0].status is CheckStatus.PASS

    def test_inclusion_suite_passes(self):
        report = run_suite("inclusion", SuiteConfig(params={"inclusion": {"vars": 2, "len": 4}}))
        assert not report.failed
        statuses = {check.check_id: check.status for check in report.checks}
        assert statuses["IC2-vs-C3"] is CheckStatus.PASS
        assert statuses["IC3-vs-C4"] is CheckStatus.PASS

    def test_sparse_suite_passes(self):
        report = run_suite("sparse", SuiteConfig(samples=2000))
        assert not report.failed
        assert {"w2-P1-P2", "w3-P1-P2", "w5-P1-P2"} <= {check.check_id for check in report.checks}

    def test_all_suites(self):
        report = run_suite("all", SuiteConfig(samples=20000))
        assert not report.failed
        assert all(":" in check.check_id for check in report.checks)


class TestModels:
    """Pydantic models and report rendering."""

    def test_config_rejects_unknown_keys(self):
        with pytest.raises(ValidationError):
            SuiteConfig.model_validate({"seed": 1, "colour": "red"})

    def test_config_bounds(self):
        with pytest.raises(ValidationError):
            SuiteConfig(workers=0)

    def test_check_result_plain_values(self):
        result = CheckResult(check_id="c", anchor="a", status=CheckStatus.PASS,
                             expected=("x", "y"), actual={1: frozenset({2, 1})})
        assert result.expected == ["x", "y"]
        assert result.actual == {"1": [1, 2]}

    def test_json_round_trip(self, toy_suite):
        report = run_suite(toy_suite)
        assert parse_report(emit_report(report)) == report

    def test_text_report(self, toy_suite):
        text = emit_report(run_suite(toy_suite), "text")
        assert "FAILED differ: values disagree" in text
        assert '  counterexample: {"x": "a", "y": "b"}' in text
        assert 'bounded-pass {"max_len": 4}' in text
        assert "Summary: 2 pass, 2 fail, 1 bounded-pass, 1 skipped" in text

    def test_text_truncation(self):
        formatter = ReportFormatter({"max_text_length": 5})
        report = SuiteReport(suite="s", seed=1, checks=[
            CheckResult(check_id="c", anchor="a very long anchor", status=CheckStatus.PASS),
        ])
        assert "a ver..." in formatter.format_text(report)

    def test_unknown_format(self, toy_suite):
        with pytest.raises(ValueError):
            emit_report(run_suite(toy_suite), "yaml")


class TestCommandLine:
    """Exit codes and output of the fbplab command."""

    def test_list_suites(self, capsys):
        assert cli.main(["list-suites"]) == 0
        output = capsys.readouterr().out
        assert "jm-oracle" in output and "all" in output

    def test_suite_failure_exit_code(self, toy_suite, capsys):
        assert cli.main(["suite", toy_suite, "--format", "json", "--seed", "9"]) == 1
        report = parse_report(capsys.readouterr().out)
        assert report.seed == 9

    def test_suite_with_config(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"workers": 1, "params": {"jm-oracle": {"m": 2, "vars": 2, "len": 4}}}))
        assert cli.main(["suite", "jm-oracle", "--config", str(config), "--format", "text"]) == 0
        assert "jm-C2-v2-len4" in capsys.readouterr().out

    def test_invalid_config(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"seeds": 3}))
        assert cli.main(["suite", "jm-oracle", "--config", str(config)]) == 2
        config.write_text("{not json")
        assert cli.main(["suite", "jm-oracle", "--config", str(config)]) == 2

    def test_unknown_suite_exit_code(self):
        assert cli.main(["suite", "nope"]) == 2

    def test_build_family(self, capsys):
        assert cli.main(["build", "family", "C", "3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 5
        assert "[1,2,3]" in lines and all(line.startswith("[") for line in lines)

    def test_build_outputs(self):
        assert cli.build_object("family", ["C", "3"]).count("\n") == 5
        assert cli.build_object("digraph", ["gamma", "2"]).splitlines()[0] == "5"
        assert cli.build_object("presentation", ["lee_L3"]).startswith("gens: e f\nsemigroup: true\n")
        assert cli.build_object("monoid", ["POI", "2"]).splitlines()[0] == "6"

    def test_build_errors(self):
        with pytest.raises(PreconditionError):
            cli.build_object("digraph", ["cycle", "3"])
        with pytest.raises(PreconditionError):
            cli.build_object("family", ["C", "three"])
        assert cli.main(["build", "presentation", "catalan"]) == 2

    def test_inspect_built_objects(self):
        monoid = cli.inspect_object("monoid", cli.build_object("monoid", ["C", "3"]))
        assert "size: 5" in monoid.splitlines() and "j_trivial: true" in monoid.splitlines()
        gamma = cli.inspect_object("digraph", cli.build_object("digraph", ["gamma", "2"])).splitlines()
        assert {"vertices: 5", "acyclic: true", "longest_path: 3"} <= set(gamma)
        lee = cli.inspect_object("presentation", cli.build_object("presentation", ["lee_L3"])).splitlines()
        assert {"size: 6", "semigroup: true", "exact: true"} <= set(lee)

    def test_inspect_coxeter_file(self, tmp_path, capsys):
        path = tmp_path / "B3.txt"
        path.write_text("3\n4 2\n3\n")
        assert cli.main(["inspect", "coxeter", str(path)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert {"group_order: 48", "hecke_model: 48", "isomorphic: true"} <= set(lines)

    def test_inspect_cyclic_digraph(self, tmp_path, capsys):
        path = tmp_path / "cycle.txt"
        path.write_text("# two-cycle\n2\n1 2\n2 1\n")
        assert cli.main(["inspect", "digraph", str(path)]) == 0
        assert "acyclic: false" in capsys.readouterr().out.splitlines()

    def test_inspect_errors(self, tmp_path):
        assert cli.main(["inspect", "monoid", str(tmp_path / "missing.txt")]) == 2
        with pytest.raises(PreconditionError):
            cli.inspect_object("plactic", "")
