import logging
from typing import Any, Callable, Dict, List, Optional

from claspkit.engine import CheckState
from claspkit.identities import (
    bracket_identity_failures, certify_all_recursions, verify_corollary, verify_recursion_numeric,
)

logger = logging.getLogger(__name__)

CheckFunction = Callable[[CheckState], Dict[str, Any]]


class CheckRegistry:
    """Registry of named verification stages"""

    def __init__(self):
        self.checks: Dict[str, CheckFunction] = {}

    def register(self, name: str, function: CheckFunction) -> None:
        self.checks[name] = function

    def get_check(self, name: str) -> Optional[CheckFunction]:
        return self.checks.get(name)

    def list_checks(self) -> List[str]:
        return list(self.checks.keys())


check_registry = CheckRegistry()


def _failed(state: CheckState, ok: bool) -> bool:
    return bool(state.get("failed", False)) or not ok


def symbolic_recursions(state: CheckState) -> Dict[str, Any]:
    """Every recursion against the closed forms in generic (a, b)"""
    certificates = certify_all_recursions()
    failures = sum(1 for c in certificates if not c.ok)
    return {
        "certificates": certificates,
        "symbolic_failures": failures,
        "symbolic_passed": failures == 0,
        "failed": _failed(state, failures == 0),
    }


def numeric_grid(state: CheckState) -> Dict[str, Any]:
    """Recursive against closed kappa on the square grid"""
    side = state.get("grid", 12)
    report = verify_recursion_numeric(side, side)
    return {
        "grid_report": report,
        "grid_compared": report.compared,
        "grid_mismatches": len(report.mismatches),
        "grid_passed": report.ok,
        "failed": _failed(state, report.ok),
    }


def corollary(state: CheckState) -> Dict[str, Any]:
    """Signed product formula for the eight extremal weights"""
    side = min(state.get("grid", 12), 10)
    checks = verify_corollary(side, side)
    ok = all(check.ok for check in checks)
    return {
        "corollary_checks": checks,
        "corollary_checked": sum(check.checked for check in checks),
        "corollary_passed": ok,
        "failed": _failed(state, ok),
    }


def bracket_identity(state: CheckState) -> Dict[str, Any]:
    """[2n] == [2][n]_{q^2} for small n"""
    failures = bracket_identity_failures(state.get("bracket_max", 20))
    return {
        "bracket_failures": failures,
        "bracket_passed": not failures,
        "failed": _failed(state, not failures),
    }


def summarize(state: CheckState) -> Dict[str, Any]:
    passed = not state.get("failed", False)
    if passed:
        logger.info("All checks passed")
    else:
        logger.warning("Verification failed")
    return {"passed": passed}


check_registry.register("symbolic_recursions", symbolic_recursions)
check_registry.register("numeric_grid", numeric_grid)
check_registry.register("corollary", corollary)
check_registry.register("bracket_identity", bracket_identity)
check_registry.register("summarize", summarize)
