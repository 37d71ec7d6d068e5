import copy
import logging
import uuid
from datetime import datetime, timezone
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional, Tuple

if TYPE_CHECKING:
    from claspkit.checks import CheckRegistry

logger = logging.getLogger(__name__)

_SCALARS = (bool, int, float, str, type(None))

Clock = Callable[[], Optional[str]]


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def no_clock() -> None:
    """Clock for reproducible logs: entries carry no timestamp"""
    return None


class CheckState:
    """State shared by the stages of a verification pipeline"""

    def __init__(self, initial_state: Dict[str, Any]):
        self.data = dict(initial_state)

    def get(self, key: str, default: Any = None) -> Any:
        return self.data.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self.data[key] = value

    def update(self, updates: Dict[str, Any]) -> None:
        self.data.update(updates)

    def snapshot(self) -> Dict[str, Any]:
        """Copy of the current state"""
        return copy.copy(self.data)


class Stage:
    """A named verification step"""

    def __init__(self, name: str, function: Callable[[CheckState], Dict[str, Any]]):
        self.name = name
        self.function = function

    def execute(self, state: CheckState) -> Dict[str, Any]:
        return self.function(state)


class Transition:
    """Edge between stages, optionally guarded by a condition on the state"""

    def __init__(self, from_stage: str, to_stage: str, condition: Optional[Callable[[CheckState], bool]] = None):
        self.from_stage = from_stage
        self.to_stage = to_stage
        self.condition = condition

    def should_traverse(self, state: CheckState) -> bool:
        if self.condition is None:
            return True
        return self.condition(state)


def _summary(result: Dict[str, Any]) -> Dict[str, Any]:
    """Scalar entries of a stage result, for the structured log"""
    return {key: value for key, value in result.items() if isinstance(value, _SCALARS)}


class VerificationEngine:
    """Runs stages from the start stage until an end stage or a dead end"""

    def __init__(self, clock: Clock = utc_now):
        self.clock = clock
        self.stages: Dict[str, Stage] = {}
        self.transitions: List[Transition] = []
        self.start_stage: Optional[str] = None
        self.end_stages: List[str] = []

    def add_stage(self, stage: Stage) -> None:
        self.stages[stage.name] = stage

    def add_transition(self, transition: Transition) -> None:
        self.transitions.append(transition)

    def next_stages(self, current: str, state: CheckState) -> List[str]:
        return [t.to_stage for t in self.transitions if t.from_stage == current and t.should_traverse(state)]

    def run(self, initial_state: Dict[str, Any], max_steps: int = 100) -> Tuple[Dict[str, Any], List[Dict[str, Any]], Optional[str]]:
        """
        Run the pipeline.

        Returns:
            tuple: (final_state, execution_log, error)
        """
        if not self.start_stage:
            return {}, [], "No start stage defined"

        state = CheckState(initial_state)
        execution_log: List[Dict[str, Any]] = []
        current = self.start_stage
        steps = 0

        try:
            while current and steps < max_steps:
                steps += 1
                if current not in self.stages:
                    raise ValueError(f"Stage '{current}' not found in pipeline")

                logger.info("Running stage %s", current)
                try:
                    result = self.stages[current].execute(state) or {}
                    state.update(result)
                    execution_log.append({
                        "stage": current,
                        "timestamp": self.clock(),
                        "summary": _summary(result),
                        "error": None,
                    })
                except Exception as e:
                    execution_log.append({
                        "stage": current,
                        "timestamp": self.clock(),
                        "summary": {},
                        "error": str(e),
                    })
                    raise

                if current in self.end_stages:
                    break
                following = self.next_stages(current, state)
                if not following:
                    break
                current = following[0]

            if steps >= max_steps and current not in self.end_stages:
                return state.snapshot(), execution_log, "Max steps reached - possible infinite loop"
            return state.snapshot(), execution_log, None

        except Exception as e:
            logger.warning("Pipeline stopped at stage %s: %s", current, e)
            return state.snapshot(), execution_log, str(e)


class Pipeline:
    """A named verification pipeline"""

    def __init__(self, pipeline_id: str, name: str, description: str = "", clock: Clock = utc_now):
        self.pipeline_id = pipeline_id
        self.name = name
        self.description = description
        self.engine = VerificationEngine(clock)

    @classmethod
    def create_from_definition(cls, definition: Dict[str, Any], registry: "CheckRegistry",
                               clock: Clock = utc_now) -> "Pipeline":
        pipeline = cls(str(uuid.uuid4()), definition["name"], definition.get("description", ""), clock)

        for stage_def in definition["stages"]:
            function = registry.get_check(stage_def["check_name"])
            if not function:
                raise ValueError(f"Check '{stage_def['check_name']}' not found in registry")
            pipeline.engine.add_stage(Stage(stage_def["name"], function))

        for transition_def in definition["transitions"]:
            condition = None
            if transition_def.get("condition"):
                condition = cls._create_condition_function(transition_def["condition"])
            pipeline.engine.add_transition(Transition(transition_def["from_stage"], transition_def["to_stage"], condition))

        if definition["start_stage"] not in pipeline.engine.stages:
            raise ValueError(f"Start stage '{definition['start_stage']}' is not a stage of the pipeline")
        pipeline.engine.start_stage = definition["start_stage"]
        pipeline.engine.end_stages = list(definition.get("end_stages", []))
        return pipeline

    @staticmethod
    def _create_condition_function(condition_expr: str) -> Callable[[CheckState], bool]:
        def condition_fn(state: CheckState) -> bool:
            try:
                return bool(eval(condition_expr, {"__builtins__": {}}, state.data))
            except Exception:
                return False
        return condition_fn

    def run(self, initial_state: Dict[str, Any]) -> Tuple[Dict[str, Any], List[Dict[str, Any]], Optional[str]]:
        return self.engine.run(initial_state)
