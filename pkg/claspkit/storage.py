import json
import logging
import random
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from claspkit.clasp_engine import KappaKey, KappaTable, in_domain, kappa_closed
from claspkit.engine import utc_now
from claspkit.errors import ClaspKitError
from claspkit.models import KappaRecordModel, RationalFunctionModel, VerifyResponse, weight_from_list
from claspkit.root_data import Weight

logger = logging.getLogger(__name__)


class RunStore:
    """In-memory storage for verification runs"""

    def __init__(self):
        self.runs: Dict[str, Dict[str, Any]] = {}

    def save_run(self, run_id: str, scope: str, status: str, response: Optional[VerifyResponse] = None) -> None:
        now = utc_now()
        created = self.runs.get(run_id, {}).get("created_at", now)
        self.runs[run_id] = {
            "run_id": run_id,
            "scope": scope,
            "status": status,
            "passed": bool(response and response.passed),
            "response": response,
            "created_at": created,
            "updated_at": now,
        }

    def get_run(self, run_id: str) -> Optional[Dict[str, Any]]:
        return self.runs.get(run_id)

    def list_runs(self, scope: Optional[str] = None) -> List[Dict[str, Any]]:
        if scope:
            return [run for run in self.runs.values() if run["scope"] == scope]
        return list(self.runs.values())

    def update_run_status(self, run_id: str, status: str) -> None:
        if run_id in self.runs:
            self.runs[run_id]["status"] = status
            self.runs[run_id]["updated_at"] = utc_now()


# Global run store instance
run_store = RunStore()


class MemoFile(BaseModel):
    """On-disk cache of kappa values"""
    version: int = 1
    records: List[KappaRecordModel]


def save_memo(path: Path, table: KappaTable) -> int:
    records = [
        KappaRecordModel(a=key.lam.a, b=key.lam.b, mu=key.mu.as_list(), value=RationalFunctionModel.from_rf(value))
        for key, value in table.items()
    ]
    Path(path).write_text(MemoFile(records=records).model_dump_json(indent=2))
    logger.info("Saved %d kappa values to %s", len(records), path)
    return len(records)


def load_memo(path: Path, table: KappaTable, sample: int = 5, seed: int = 0) -> int:
    """Load cached kappa values; the whole cache is dropped if any sampled entry is wrong"""
    path = Path(path)
    if not path.exists():
        logger.info("No kappa cache at %s", path)
        return 0
    try:
        memo = MemoFile.model_validate(json.loads(path.read_text()))
        entries = [
            (KappaKey(Weight(r.a, r.b), weight_from_list(r.mu)), r.value.to_rf())
            for r in memo.records
        ]
        rng = random.Random(seed)
        for key, value in rng.sample(entries, min(sample, len(entries))):
            if value != kappa_closed(key.lam, key.mu):
                raise ClaspKitError(f"Cached value for {key} does not match the closed form")
        outside = [key for key, _ in entries if not in_domain(key.lam, key.mu)]
        if outside:
            raise ClaspKitError(f"Cache holds keys outside the domain: {outside[0]}")
    except (OSError, ValueError, ValidationError, IndexError) as e:
        # ClaspKitError is a ValueError
        logger.warning("Discarding kappa cache %s: %s", path, e)
        return 0
    for key, value in entries:
        table.store(key, value)
    logger.info("Loaded %d kappa values from %s", len(entries), path)
    return len(entries)
