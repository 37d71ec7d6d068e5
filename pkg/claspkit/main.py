import logging
import uuid
from typing import Any, Dict, Optional

from fastapi import FastAPI, HTTPException

from claspkit import __version__
from claspkit.checks import check_registry
from claspkit.config import Settings
from claspkit.errors import ClaspKitError
from claspkit.models import (
    DimsResponse, ExpandResponse, FusionResponse, KappaMode, KappaTableResponse, RunSummary, VerifyRequest,
    VerifyResponse,
)
from claspkit.pipelines import run_verification
from claspkit.reports import dims_report, expand_report, fusion_report, kappa_table, parse_path, parse_range
from claspkit.rep_combinatorics import WeightWord
from claspkit.root_data import Weight
from claspkit.storage import run_store

logger = logging.getLogger(__name__)

app = FastAPI(
    title="claspkit",
    description="Exact clasp coefficients of the C2 web category",
    version=__version__,
)


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": "claspkit",
        "version": __version__,
        "endpoints": {
            "kappa": "GET /kappa?a=lo..hi&b=lo..hi&mu=x,y&mode=closed",
            "verify": "POST /verify",
            "get_run": "GET /verify/{run_id}",
            "list_runs": "GET /runs",
            "expand": "GET /expand/{a}/{b}?path=112&ell=5",
            "fusion": "GET /fusion/{ell}",
            "dims": "GET /dims/{word}",
        },
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}


@app.get("/kappa")
def get_kappa(a: str = "0..3", b: str = "0..3", mu: Optional[str] = None,
              mode: KappaMode = KappaMode.CLOSED) -> KappaTableResponse:
    """Table of local intersection forms"""
    try:
        return kappa_table(parse_range(a), parse_range(b), Weight.parse(mu) if mu else None, mode)
    except ClaspKitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Failed to compute kappa table: {str(e)}")


@app.post("/verify")
def verify(request: VerifyRequest) -> VerifyResponse:
    """Run a verification pipeline and keep the result"""
    run_id = str(uuid.uuid4())
    try:
        grid = request.grid if request.grid is not None else Settings.from_env().grid
        run_store.save_run(run_id, request.scope.value, "running")
        response = run_verification(request.scope, grid, request.fail_fast, run_id=run_id)
        run_store.save_run(run_id, request.scope.value, response.status, response)
        return response
    except ClaspKitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("Verification run %s crashed", run_id)
        run_store.update_run_status(run_id, "failed")
        raise HTTPException(status_code=500, detail=f"Failed to run verification: {str(e)}")


@app.get("/verify/{run_id}")
async def get_run(run_id: str) -> VerifyResponse:
    """Result of an earlier verification run"""
    run = run_store.get_run(run_id)
    if not run or run["response"] is None:
        raise HTTPException(status_code=404, detail=f"Run {run_id} not found")
    return run["response"]


@app.get("/runs")
async def list_runs(scope: Optional[str] = None) -> Dict[str, Any]:
    """List all runs, optionally filtered by scope"""
    runs = [
        RunSummary(**{key: run[key] for key in RunSummary.model_fields})
        for run in run_store.list_runs(scope)
    ]
    return {"count": len(runs), "runs": runs}


@app.get("/checks")
async def list_checks() -> Dict[str, Any]:
    """List the registered verification stages"""
    checks = check_registry.list_checks()
    return {"count": len(checks), "checks": checks}


@app.get("/expand/{a}/{b}")
def expand(a: int, b: int, path: Optional[str] = None, ell: Optional[int] = None) -> ExpandResponse:
    """Triple clasp expansion, optionally with existence at a root of unity"""
    try:
        return expand_report(Weight(a, b), parse_path(path), ell)
    except ClaspKitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Failed to expand clasp: {str(e)}")


@app.get("/fusion/{ell}")
def fusion(ell: int) -> FusionResponse:
    """Negligible objects and the lowest alcove at q = exp(i pi / ell)"""
    try:
        return fusion_report(ell)
    except ClaspKitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Failed to analyze ell={ell}: {str(e)}")


@app.get("/dims/{word}")
def dims(word: str) -> DimsResponse:
    """Decomposition of a tensor word"""
    try:
        return dims_report(WeightWord.parse(word))
    except ClaspKitError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        raise HTTPException(status_code=500, detail=f"Failed to decompose {word}: {str(e)}")


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
