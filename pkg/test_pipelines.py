"""
Tests for the verification engine, the check registry and the pipelines
"""
import pytest

from claspkit import clasp_engine
from claspkit.checks import CheckRegistry, check_registry
from claspkit.engine import CheckState, Pipeline, Stage, Transition, VerificationEngine, no_clock
from claspkit.models import PipelineDefinition, VerifyScope
from claspkit.pipelines import ALL_PIPELINE, PIPELINES, build_pipeline, run_key, run_verification
from claspkit.qnum import QFactor, SymExponent, SymExpr


def broken_registry():
    registry = CheckRegistry()
    registry.register("boom", lambda state: 1 / 0)
    registry.register("summarize", lambda state: {"passed": not state.get("failed", False)})
    return registry


def test_registry_lists_stages():
    assert check_registry.list_checks() == [
        "symbolic_recursions", "numeric_grid", "corollary", "bracket_identity", "summarize",
    ]
    assert check_registry.get_check("missing") is None


def test_engine_follows_conditions():
    engine = VerificationEngine()
    engine.add_stage(Stage("a", lambda state: {"x": 1}))
    engine.add_stage(Stage("b", lambda state: {"took": "b"}))
    engine.add_stage(Stage("c", lambda state: {"took": "c"}))
    engine.add_transition(Transition("a", "b", lambda state: state.get("x") == 2))
    engine.add_transition(Transition("a", "c"))
    engine.start_stage = "a"
    engine.end_stages = ["b", "c"]
    state, log, error = engine.run({})
    assert error is None
    assert state["took"] == "c"
    assert [entry["stage"] for entry in log] == ["a", "c"]
    assert log[0]["summary"] == {"x": 1}


def test_engine_without_start_stage():
    assert VerificationEngine().run({}) == ({}, [], "No start stage defined")


def test_engine_stops_on_loops():
    engine = VerificationEngine()
    engine.add_stage(Stage("a", lambda state: {}))
    engine.add_transition(Transition("a", "a"))
    engine.start_stage = "a"
    _, log, error = engine.run({}, max_steps=5)
    assert len(log) == 5
    assert "Max steps" in error


def test_stage_errors_are_logged():
    definition = {
        "name": "broken",
        "stages": [{"name": "boom", "check_name": "boom"}, {"name": "summarize", "check_name": "summarize"}],
        "transitions": [{"from_stage": "boom", "to_stage": "summarize"}],
        "start_stage": "boom",
        "end_stages": ["summarize"],
    }
    pipeline = Pipeline.create_from_definition(definition, broken_registry())
    _, log, error = pipeline.run({})
    assert "division by zero" in error
    assert log[-1]["stage"] == "boom"
    assert log[-1]["error"] == error


def test_conditions_are_sandboxed():
    condition = Pipeline._create_condition_function("__import__('os')")
    assert condition(CheckState({})) is False
    assert Pipeline._create_condition_function("fail_fast and failed")(CheckState({"fail_fast": True, "failed": True}))


def test_definitions_are_validated():
    for definition in PIPELINES.values():
        PipelineDefinition(**definition)
    with pytest.raises(ValueError):
        Pipeline.create_from_definition({**ALL_PIPELINE, "start_stage": "nowhere"}, check_registry)
    with pytest.raises(ValueError):
        Pipeline.create_from_definition(
            {**ALL_PIPELINE, "stages": [{"name": "x", "check_name": "missing"}]}, check_registry,
        )


def test_build_pipeline():
    pipeline = build_pipeline(VerifyScope.RECURSIONS)
    assert pipeline.name == "recursions"
    assert set(pipeline.engine.stages) == {"symbolic_recursions", "numeric_grid", "summarize"}


def test_run_all_checks():
    response = run_verification(VerifyScope.ALL, grid=3)
    assert response.status == "completed"
    assert response.passed
    assert len(response.certificates) == 7
    assert response.grid_report.compared == 112
    assert len(response.corollary) == 8
    assert response.bracket_failures == []
    assert [entry.stage for entry in response.execution_log] == [
        "symbolic_recursions", "numeric_grid", "corollary", "bracket_identity", "summarize",
    ]


def test_corollary_scope_skips_recursions():
    response = run_verification(VerifyScope.COROLLARY, grid=2)
    assert response.passed
    assert response.certificates == []
    assert response.grid_report is None


def test_fail_fast_skips_to_summary(monkeypatch):
    monkeypatch.setitem(clasp_engine.RECURSION_CONSTANTS, "two", SymExpr.fraction(1, [QFactor(SymExponent(0, 0, 3))]))
    response = run_verification(VerifyScope.ALL, grid=1, fail_fast=True)
    assert not response.passed
    assert [entry.stage for entry in response.execution_log] == ["symbolic_recursions", "summarize"]

    response = run_verification(VerifyScope.ALL, grid=1, fail_fast=False)
    assert not response.passed
    assert len(response.execution_log) == 5
    assert response.grid_report.mismatches


def test_clock_controls_log_timestamps():
    stamped = run_verification(VerifyScope.COROLLARY, 1)
    assert all(entry.timestamp for entry in stamped.execution_log)
    fixed = run_verification(VerifyScope.COROLLARY, 1, clock=lambda: "2024-01-01T00:00:00+00:00")
    assert {entry.timestamp for entry in fixed.execution_log} == {"2024-01-01T00:00:00+00:00"}
    bare = run_verification(VerifyScope.COROLLARY, 1, run_id="fixed", clock=no_clock)
    assert bare.run_id == "fixed"
    assert all(entry.timestamp is None for entry in bare.execution_log)


def test_run_key_depends_on_every_argument():
    keys = {run_key(scope, grid, fail_fast) for scope in VerifyScope for grid in (1, 2) for fail_fast in (False, True)}
    assert len(keys) == 3 * 2 * 2
    assert run_key(VerifyScope.ALL, 12, False) == run_key(VerifyScope.ALL, 12, False)
