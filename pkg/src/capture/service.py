"""JSON-over-HTTP facade over the capture engine, analyzer, and simulator.

Responses are pure functions of (engine state, request): no timestamps, no
random ids, so a recorded session replays byte-identically against a fresh
store. Errors always come back as {"error": "..."} with a matching status.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import analyzer, reports
from .engine import CaptureEngine, EngineError
from .fillin import FillinEvent
from .menus import SplitMenu
from .records import Record
from .sampledata import BASE_VOCABULARY, demo_records
from .simulator import (
    CostModel,
    RecognitionModel,
    SimulationError,
    condition_by_name,
    condition_presets,
    run_experiment,
)
from .store import StoreError


class CommitBody(BaseModel):
    value: str
    source: str = "typed"


class SimulateBody(BaseModel):
    conditions: Optional[list[str]] = None
    repeats: int = 2
    seed: int = 0
    cost_model: Optional[dict[str, float]] = None
    recognition: Optional[dict] = None
    use_store: bool = False


def _menu_json(menu: Optional[SplitMenu]) -> Optional[dict]:
    if menu is None:
        return None
    return {"recent": list(menu.recent), "fixed": list(menu.fixed)}


def _event_json(event: FillinEvent) -> dict:
    return {"target": event.target, "value": event.value, "source_seq": event.source_seq}


def _record_json(record: Record) -> dict:
    return {
        "id": record.id,
        "seq": record.seq,
        "fields": {fid: fv.raw for fid, fv in record.values.items() if not fv.is_empty},
        "prov": {fid: fv.provenance.value for fid, fv in record.values.items() if not fv.is_empty},
    }


def create_app(engine: Optional[CaptureEngine] = None, store_path: Optional[str] = None) -> FastAPI:
    engine = engine or CaptureEngine()
    app = FastAPI(title="capture", docs_url=None, redoc_url=None)

    @app.exception_handler(EngineError)
    async def engine_error(_req: Request, exc: EngineError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.exception_handler(analyzer.AnalysisError)
    async def analysis_error(_req: Request, exc: analyzer.AnalysisError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(StoreError)
    async def store_error(_req: Request, exc: StoreError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(SimulationError)
    async def simulation_error(_req: Request, exc: SimulationError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422, content={"error": str(exc.errors()[0]["msg"])})

    @app.get("/schema")
    def get_schema():
        return json.loads(engine.schema.to_json())

    @app.post("/drafts")
    def new_draft():
        session = engine.new_draft()
        return {"draft_id": session.draft_id}

    @app.post("/drafts/{draft_id}/fields/{field_id}")
    def commit_field(draft_id: str, field_id: str, body: CommitBody):
        events, menu = engine.commit_field(draft_id, field_id, body.value, body.source)
        return {
            "fillin_events": [_event_json(e) for e in events],
            "menu": _menu_json(menu),
        }

    @app.post("/drafts/{draft_id}/finalize")
    def finalize(draft_id: str):
        seq = engine.finalize_draft(draft_id)
        if store_path:
            _persist(engine, store_path)
        return {"seq": seq}

    @app.get("/fields/{field_id}/menu")
    def field_menu(field_id: str):
        return _menu_json(engine.menu_for(field_id))

    @app.get("/records")
    def records(limit: int = 50, offset: int = 0):
        page, total = engine.records_page(limit, offset)
        return {"records": [_record_json(r) for r in page], "total": total}

    @app.get("/analysis/coverage")
    def coverage(field: str, target: float = 0.5):
        curve = analyzer.coverage_curve(engine.store, field)
        size = analyzer.recommend_menu_size(curve, target)
        return {
            "field": field,
            "target": target,
            "coverage": list(curve.coverage),
            "recommended_size": size,
        }

    @app.get("/analysis/dependencies")
    def dependencies(
        min_density: float = 0.2, min_functionality: float = 0.8, min_support: int = 10
    ):
        thresholds = analyzer.Thresholds(min_density, min_functionality, min_support)
        report = analyzer.mine(engine.store, thresholds)
        return analyzer.mining_report_dict(report)

    @app.post("/simulate")
    def simulate(body: SimulateBody):
        if body.conditions:
            conditions = [condition_by_name(n) for n in body.conditions]
        else:
            conditions = condition_presets()
        cost = CostModel(**body.cost_model) if body.cost_model else CostModel()
        if body.recognition:
            recog_kwargs = dict(body.recognition)
            if "stage_rates" in recog_kwargs:
                recog_kwargs["stage_rates"] = {
                    fid: tuple(rates) for fid, rates in recog_kwargs["stage_rates"].items()
                }
            if "fallback_rates" in recog_kwargs:
                recog_kwargs["fallback_rates"] = tuple(recog_kwargs["fallback_rates"])
            recog = RecognitionModel(**recog_kwargs)
        else:
            recog = RecognitionModel()
        records_to_enter = engine.store.records if body.use_store else demo_records()
        if not records_to_enter:
            return JSONResponse(status_code=400, content={"error": "no records to enter"})
        results = run_experiment(
            [r.copy() for r in records_to_enter],
            conditions,
            repeats=body.repeats,
            seed=body.seed,
            schema=engine.schema,
            base_vocabulary=BASE_VOCABULARY,
            recog=recog,
            cost=cost,
        )
        table = reports.median_table(results)
        summary = {
            "medians": {
                f"{cond}/{label}": minutes for (cond, label), minutes in table.minutes.items()
            },
            "results": [r.to_dict() for r in results],
        }
        try:
            summary["speedups"] = reports.speedup_vs_null(table)
        except reports.ReportError:
            pass
        return summary

    return app


def _persist(engine: CaptureEngine, store_path: str) -> None:
    path = Path(store_path)
    with path.open("w", encoding="utf-8") as fh:
        engine.store.export_jsonl(fh)
    path.with_suffix(path.suffix + ".menus.json").write_text(
        engine.menus.to_json(), encoding="utf-8"
    )
