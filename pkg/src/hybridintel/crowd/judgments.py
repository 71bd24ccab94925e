"""Likert judgments, panel configuration, aggregation, and coverage checks.

A judgment rates one startup on feasibility, scalability and desirability,
each on a 7-point scale. Panels are aggregated per rater class by the
unweighted mean over all raters and all three dimensions; the mean score
s in [1, 7] maps affinely onto the probability (s - 1) / 6.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence, TextIO

from ..errors import ConfigError, PanelError, ValidationError
from ..learners.base import ProbabilisticPrediction
from ..taxonomy.records import StartupRecord

DIMENSIONS = ("feasibility", "scalability", "desirability")
RATER_CLASSES = ("nonexpert", "expert")

CROWD_PREDICTOR_IDS = ("crowd:nonexpert", "crowd:expert")

JUDGMENT_CSV_HEADER = (
    "rater_id", "rater_class", "record_id",
    "feasibility", "scalability", "desirability", "submitted_at",
)


@dataclass(frozen=True)
class Judgment:
    """One rater's three-dimension rating of one startup."""

    rater_id: str
    rater_class: str
    record_id: str
    ratings: dict[str, int]
    submitted_at: datetime = field(
        default_factory=lambda: datetime.now(timezone.utc).replace(microsecond=0)
    )

    def __post_init__(self) -> None:
        if self.rater_class not in RATER_CLASSES:
            raise ValidationError("rater_class", self.rater_class,
                                  f"must be one of {RATER_CLASSES}")
        if set(self.ratings) != set(DIMENSIONS):
            raise ValidationError("ratings", sorted(self.ratings),
                                  f"must rate exactly the dimensions {DIMENSIONS}")
        for dim in DIMENSIONS:
            value = self.ratings[dim]
            if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= 7:
                raise ValidationError(dim, value, "must be an integer in 1..7")

    def mean_rating(self) -> float:
        return sum(self.ratings[d] for d in DIMENSIONS) / len(DIMENSIONS)


@dataclass(frozen=True)
class PanelConfig:
    """Panel size bounds per rater class, plus the rater quality gate.

    ``max_rater_noise_sd`` mirrors a crowd-platform approval-rate screen:
    simulated raters noisier than the ceiling are excluded from panels.
    """

    nonexpert_min: int = 16
    nonexpert_max: int = 20
    expert_min: int = 5
    expert_max: int = 7
    max_rater_noise_sd: float | None = None

    def __post_init__(self) -> None:
        for lo, hi, label in ((self.nonexpert_min, self.nonexpert_max, "nonexpert"),
                              (self.expert_min, self.expert_max, "expert")):
            if not (isinstance(lo, int) and isinstance(hi, int) and 1 <= lo <= hi):
                raise ConfigError(
                    f"{label} panel bounds must satisfy 1 <= min <= max, got [{lo}, {hi}]"
                )

    def bounds(self, rater_class: str) -> tuple[int, int]:
        if rater_class == "nonexpert":
            return self.nonexpert_min, self.nonexpert_max
        if rater_class == "expert":
            return self.expert_min, self.expert_max
        raise ConfigError(f"unknown rater class {rater_class!r}")


def score_to_probability(score: float) -> float:
    """Affine map of the 1..7 Likert scale onto [0, 1]."""
    return (score - 1.0) / 6.0


def aggregate_judgments(judgments: Sequence[Judgment],
                        config: PanelConfig) -> ProbabilisticPrediction:
    """Unweighted mean over all raters and dimensions for one record and class."""
    if not judgments:
        raise PanelError("cannot aggregate an empty judgment panel")
    record_ids = {j.record_id for j in judgments}
    if len(record_ids) != 1:
        raise PanelError(f"panel mixes records: {sorted(record_ids)}")
    classes = {j.rater_class for j in judgments}
    if len(classes) != 1:
        raise PanelError(f"panel mixes rater classes: {sorted(classes)}")
    raters = [j.rater_id for j in judgments]
    if len(set(raters)) != len(raters):
        raise PanelError("panel contains duplicate raters")

    rater_class = judgments[0].rater_class
    lo, hi = config.bounds(rater_class)
    n = len(judgments)
    if n < lo:
        raise PanelError(
            f"insufficient panel: {n} {rater_class} judgments for record "
            f"{judgments[0].record_id!r}, minimum is {lo}"
        )
    if n > hi:
        raise PanelError(
            f"oversized panel: {n} {rater_class} judgments for record "
            f"{judgments[0].record_id!r}, maximum is {hi}"
        )

    total = sum(j.ratings[d] for j in judgments for d in DIMENSIONS)
    score = total / (n * len(DIMENSIONS))
    return ProbabilisticPrediction(
        predictor_id=f"crowd:{rater_class}",
        record_id=judgments[0].record_id,
        probability=score_to_probability(score),
    )


@dataclass(frozen=True)
class CoverageEntry:
    record_id: str
    rater_class: str
    count: int
    required_min: int
    met: bool


@dataclass(frozen=True)
class CoverageReport:
    entries: tuple[CoverageEntry, ...]
    ready: bool
    unknown_record_ids: tuple[str, ...] = ()

    def deficient(self) -> list[CoverageEntry]:
        return [e for e in self.entries if not e.met]

    def to_obj(self) -> dict:
        return {
            "ready": self.ready,
            "unknown_record_ids": list(self.unknown_record_ids),
            "entries": [
                {
                    "record_id": e.record_id,
                    "rater_class": e.rater_class,
                    "count": e.count,
                    "required_min": e.required_min,
                    "met": e.met,
                }
                for e in self.entries
            ],
        }


def validate_panel_coverage(judgments: Iterable[Judgment],
                            records: Sequence[StartupRecord],
                            config: PanelConfig) -> CoverageReport:
    """Per record and rater class: judgment count vs the configured minimum."""
    known = {r.id for r in records}
    counts: dict[tuple[str, str], int] = {}
    unknown: set[str] = set()
    for j in judgments:
        if j.record_id not in known:
            unknown.add(j.record_id)
            continue
        counts[(j.record_id, j.rater_class)] = counts.get((j.record_id, j.rater_class), 0) + 1

    entries = []
    ready = True
    for record in records:
        for rater_class in RATER_CLASSES:
            required, _ = config.bounds(rater_class)
            count = counts.get((record.id, rater_class), 0)
            met = count >= required
            ready = ready and met
            entries.append(CoverageEntry(record.id, rater_class, count, required, met))
    return CoverageReport(entries=tuple(entries), ready=ready,
                          unknown_record_ids=tuple(sorted(unknown)))


def group_judgments(judgments: Iterable[Judgment]) -> dict[tuple[str, str], list[Judgment]]:
    """Group by (record_id, rater_class), preserving submission order."""
    groups: dict[tuple[str, str], list[Judgment]] = {}
    for j in judgments:
        groups.setdefault((j.record_id, j.rater_class), []).append(j)
    return groups


def judgment_to_row(j: Judgment) -> list[str]:
    return [
        j.rater_id, j.rater_class, j.record_id,
        str(j.ratings["feasibility"]), str(j.ratings["scalability"]),
        str(j.ratings["desirability"]), j.submitted_at.isoformat(),
    ]


def judgment_from_row(row: Sequence[str]) -> Judgment:
    if len(row) != len(JUDGMENT_CSV_HEADER):
        raise ValidationError("row", list(row),
                              f"must have {len(JUDGMENT_CSV_HEADER)} cells")
    return Judgment(
        rater_id=row[0],
        rater_class=row[1],
        record_id=row[2],
        ratings={
            "feasibility": int(row[3]),
            "scalability": int(row[4]),
            "desirability": int(row[5]),
        },
        submitted_at=datetime.fromisoformat(row[6]),
    )


def write_judgments(judgments: Iterable[Judgment], target: str | os.PathLike | TextIO) -> None:
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8", newline="") as handle:
            write_judgments(judgments, handle)
        return
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(JUDGMENT_CSV_HEADER)
    for j in judgments:
        writer.writerow(judgment_to_row(j))


def read_judgments(source: str | os.PathLike | TextIO) -> list[Judgment]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8", newline="") as handle:
            return read_judgments(handle)
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or tuple(header) != JUDGMENT_CSV_HEADER:
        raise ValidationError("header", header, f"must be {list(JUDGMENT_CSV_HEADER)}")
    return [judgment_from_row(row) for row in reader if row]


def judgments_to_csv_text(judgments: Iterable[Judgment]) -> str:
    buffer = io.StringIO()
    write_judgments(judgments, buffer)
    return buffer.getvalue()
