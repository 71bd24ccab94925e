"""HTTP service for crowd judgment collection.

Endpoints:
    GET  /api/startups            id list with per-class judgment counts
    GET  /api/startups/{id}/card  the crowd card (never includes the label)
    POST /api/judgments           store one judgment (201 / 404 / 409 / 422)
    GET  /api/coverage            panel coverage report
    GET  /api/predictions         crowd aggregates for fully covered panels
"""

from __future__ import annotations

import os
from datetime import datetime, timezone
from typing import Sequence

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from ..crowd.judgments import (
    Judgment,
    PanelConfig,
    aggregate_judgments,
    group_judgments,
    validate_panel_coverage,
)
from ..errors import ConfigError, DuplicateJudgmentError, PanelError
from ..taxonomy.cards import render_card
from ..taxonomy.records import StartupRecord
from .store import JudgmentStore

RATER_CLASS_PATTERN = "^(nonexpert|expert)$"


class JudgmentIn(BaseModel):
    """Judgment wire shape; field bounds give 422s with field locations."""

    rater_id: str = Field(min_length=1, max_length=200)
    rater_class: str = Field(pattern=RATER_CLASS_PATTERN)
    record_id: str = Field(min_length=1)
    feasibility: int = Field(ge=1, le=7)
    scalability: int = Field(ge=1, le=7)
    desirability: int = Field(ge=1, le=7)
    submitted_at: datetime | None = None

    def to_judgment(self) -> Judgment:
        return Judgment(
            rater_id=self.rater_id,
            rater_class=self.rater_class,
            record_id=self.record_id,
            ratings={
                "feasibility": self.feasibility,
                "scalability": self.scalability,
                "desirability": self.desirability,
            },
            submitted_at=self.submitted_at
            or datetime.now(timezone.utc).replace(microsecond=0),
        )


def create_app(records: Sequence[StartupRecord], store: JudgmentStore,
               panel: PanelConfig | None = None) -> FastAPI:
    panel = panel or PanelConfig()
    by_id = {r.id: r for r in records}
    app = FastAPI(title="startup judgment service", docs_url=None, redoc_url=None)

    @app.get("/api/startups")
    def list_startups() -> list[dict]:
        judgments = store.all_judgments()
        counts: dict[tuple[str, str], int] = {}
        for j in judgments:
            counts[(j.record_id, j.rater_class)] = counts.get((j.record_id, j.rater_class), 0) + 1
        return [
            {
                "id": r.id,
                "judgments": {
                    "nonexpert": counts.get((r.id, "nonexpert"), 0),
                    "expert": counts.get((r.id, "expert"), 0),
                },
            }
            for r in records
        ]

    @app.get("/api/startups/{record_id}/card")
    def get_card(record_id: str) -> dict:
        record = by_id.get(record_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown record {record_id!r}")
        return render_card(record).to_wire()

    @app.post("/api/judgments", status_code=201)
    def post_judgment(payload: JudgmentIn) -> dict:
        record = by_id.get(payload.record_id)
        if record is None:
            raise HTTPException(status_code=404,
                                detail=f"unknown record {payload.record_id!r}")
        _, class_max = panel.bounds(payload.rater_class)
        if store.count_for(payload.record_id, payload.rater_class) >= class_max:
            raise HTTPException(
                status_code=409,
                detail=f"panel for record {payload.record_id!r} "
                       f"({payload.rater_class}) is full",
            )
        try:
            store.append(payload.to_judgment())
        except DuplicateJudgmentError as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from None
        return {
            "status": "stored",
            "record_id": payload.record_id,
            "rater_class": payload.rater_class,
            "count": store.count_for(payload.record_id, payload.rater_class),
        }

    @app.get("/api/coverage")
    def get_coverage() -> dict:
        report = validate_panel_coverage(store.all_judgments(), records, panel)
        return report.to_obj()

    @app.get("/api/predictions")
    def get_predictions() -> list[dict]:
        groups = group_judgments(store.all_judgments())
        out = []
        for record in records:
            for rater_class in ("nonexpert", "expert"):
                panel_judgments = groups.get((record.id, rater_class), [])
                lo, _ = panel.bounds(rater_class)
                if len(panel_judgments) < lo:
                    continue
                try:
                    prediction = aggregate_judgments(panel_judgments, panel)
                except PanelError:
                    continue  # e.g. oversized legacy panel in the store file
                out.append({
                    "record_id": record.id,
                    "predictor_id": prediction.predictor_id,
                    "rater_class": rater_class,
                    "probability": prediction.probability,
                    "judgment_count": len(panel_judgments),
                })
        return out

    return app


def mount_rating_ui(app: FastAPI, directory: str | os.PathLike) -> None:
    """Serve the built browser client from the API's own origin.

    Mounted last so /api/* keeps priority; ``directory`` is the frontend
    root containing index.html and dist/.
    """
    from fastapi.staticfiles import StaticFiles

    if not os.path.isdir(directory):
        raise ConfigError(f"UI directory {os.fspath(directory)!r} does not exist")
    app.mount("/", StaticFiles(directory=os.fspath(directory), html=True), name="ui")
