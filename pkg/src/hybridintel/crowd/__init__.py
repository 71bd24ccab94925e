"""Human judgment collection, simulation, and aggregation."""

from .judgments import (
    CROWD_PREDICTOR_IDS,
    DIMENSIONS,
    JUDGMENT_CSV_HEADER,
    RATER_CLASSES,
    CoverageEntry,
    CoverageReport,
    Judgment,
    PanelConfig,
    aggregate_judgments,
    group_judgments,
    judgments_to_csv_text,
    read_judgments,
    score_to_probability,
    validate_panel_coverage,
    write_judgments,
)
from .simulate import RaterModel, RaterPoolConfig, rate_once, simulate_crowd

__all__ = [
    "CROWD_PREDICTOR_IDS",
    "DIMENSIONS",
    "JUDGMENT_CSV_HEADER",
    "RATER_CLASSES",
    "CoverageEntry",
    "CoverageReport",
    "Judgment",
    "PanelConfig",
    "RaterModel",
    "RaterPoolConfig",
    "aggregate_judgments",
    "group_judgments",
    "judgments_to_csv_text",
    "rate_once",
    "read_judgments",
    "score_to_probability",
    "simulate_crowd",
    "validate_panel_coverage",
    "write_judgments",
]
