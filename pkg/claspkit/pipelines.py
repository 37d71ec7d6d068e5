"""
Verification pipeline definitions and the runner shared by the CLI and the
HTTP service.
"""
import logging
import uuid
from typing import Any, Dict, List, Optional

from claspkit.checks import check_registry
from claspkit.engine import Clock, Pipeline, utc_now
from claspkit.models import (
    CorollaryCheckModel, ExecutionLogEntry, GridReportModel, IdentityCertificateModel,
    PipelineDefinition, VerifyResponse, VerifyScope,
)

logger = logging.getLogger(__name__)

STOP = "fail_fast and failed"
CONTINUE = "not (fail_fast and failed)"


def _chain(names: List[str]) -> List[Dict[str, Any]]:
    """Transitions that stop early on failure when fail_fast is set"""
    transitions = []
    for current, following in zip(names, names[1:]):
        if following == "summarize":
            transitions.append({"from_stage": current, "to_stage": following, "type": "direct"})
            continue
        transitions.append({"from_stage": current, "to_stage": "summarize", "type": "conditional", "condition": STOP})
        transitions.append({"from_stage": current, "to_stage": following, "type": "conditional", "condition": CONTINUE})
    return transitions


def _definition(name: str, description: str, stages: List[str]) -> Dict[str, Any]:
    return {
        "name": name,
        "description": description,
        "stages": [{"name": stage, "check_name": stage} for stage in stages],
        "transitions": _chain(stages),
        "start_stage": stages[0],
        "end_stages": ["summarize"],
    }


RECURSIONS_PIPELINE = _definition(
    "recursions",
    "Closed forms against the seven recursions, symbolically and on a grid",
    ["symbolic_recursions", "numeric_grid", "summarize"],
)

COROLLARY_PIPELINE = _definition(
    "corollary",
    "Weyl orbit product formula and the [2n]/[2] identity",
    ["corollary", "bracket_identity", "summarize"],
)

ALL_PIPELINE = _definition(
    "all",
    "Every verification",
    ["symbolic_recursions", "numeric_grid", "corollary", "bracket_identity", "summarize"],
)

PIPELINES = {
    VerifyScope.RECURSIONS: RECURSIONS_PIPELINE,
    VerifyScope.COROLLARY: COROLLARY_PIPELINE,
    VerifyScope.ALL: ALL_PIPELINE,
}


def run_key(scope: VerifyScope, grid: int, fail_fast: bool) -> str:
    """Run id determined by the arguments, so repeated runs print the same output"""
    return str(uuid.uuid5(uuid.NAMESPACE_URL, f"claspkit:verify:{scope.value}:{grid}:{int(fail_fast)}"))


def build_pipeline(scope: VerifyScope, clock: Clock = utc_now) -> Pipeline:
    definition = PipelineDefinition(**PIPELINES[scope])
    return Pipeline.create_from_definition(definition.model_dump(), check_registry, clock)


def run_verification(scope: VerifyScope = VerifyScope.ALL, grid: int = 12, fail_fast: bool = False,
                     run_id: Optional[str] = None, clock: Clock = utc_now) -> VerifyResponse:
    pipeline = build_pipeline(scope, clock)
    logger.info("Running %s pipeline on grid %d", pipeline.name, grid)
    final_state, execution_log, error = pipeline.run({"grid": grid, "fail_fast": fail_fast, "failed": False})

    report = final_state.get("grid_report")
    passed = bool(final_state.get("passed", False)) and error is None
    return VerifyResponse(
        run_id=run_id or str(uuid.uuid4()),
        scope=scope,
        status="failed" if error else "completed",
        passed=passed,
        grid=grid,
        certificates=[IdentityCertificateModel.from_certificate(c) for c in final_state.get("certificates", [])],
        grid_report=GridReportModel.from_report(report) if report else None,
        corollary=[CorollaryCheckModel.from_check(c) for c in final_state.get("corollary_checks", [])],
        bracket_failures=final_state.get("bracket_failures", []),
        execution_log=[ExecutionLogEntry(**entry) for entry in execution_log],
        error=error,
    )
