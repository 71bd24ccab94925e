"""StartupRecord: one startup described by all 21 taxonomy signals."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

from ..errors import ValidationError
from .schema import (
    B2B_B2C,
    BUSINESS_MODEL_DNA,
    EDUCATION_LEVELS,
    FINANCIAL_SUPPORT,
    HYPE_PHASES,
    KNOWLEDGE_SUPPORT,
    REVENUE_MODELS,
    TaxonomySchema,
)


@dataclass(frozen=True)
class StartupRecord:
    """All hard and soft signals of a startup, plus the optional outcome label.

    Soft-signal text fields (``*_text``) are for human raters only and are
    never encoded into machine features. ``label_series_a`` is None for
    unlabeled records.
    """

    id: str
    b2b_b2c: str
    industry: str
    firm_age_years: float
    business_model_dna: str
    tech_hype_phase: str
    proof_of_concept: bool
    competitor_count: int
    competitor_proximity_mean: float | None
    revenue_model: str
    capital_raised_usd: float
    team_size: int
    team_field_backgrounds: int
    entrepreneurial_experience: bool
    education_level: str
    knowledge_support: frozenset[str] = field(default_factory=frozenset)
    financial_support: frozenset[str] = field(default_factory=frozenset)
    pilot_customers: int = 0
    web_visits: float = 0.0
    web_avg_duration_s: float = 0.0
    web_backlinks: float = 0.0
    web_bounce_rate: float = 0.0
    twitter_followers: int = 0
    tweet_count: int = 0
    tweet_sentiment: float = 0.0
    product_innovativeness_text: str = ""
    scalability_text: str = ""
    vision_text: str = ""
    label_series_a: bool | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "knowledge_support", frozenset(self.knowledge_support))
        object.__setattr__(self, "financial_support", frozenset(self.financial_support))

    def validate(self, schema: TaxonomySchema) -> None:
        """Raise ValidationError on the first violated field constraint."""
        if not self.id:
            raise ValidationError("id", self.id, "must be a non-empty string")
        _check_vocab(self, "b2b_b2c", B2B_B2C)
        _check_vocab(self, "industry", schema.industries)
        _check_vocab(self, "business_model_dna", BUSINESS_MODEL_DNA)
        _check_vocab(self, "tech_hype_phase", HYPE_PHASES)
        _check_vocab(self, "revenue_model", REVENUE_MODELS)
        _check_vocab(self, "education_level", EDUCATION_LEVELS)
        for token in sorted(self.knowledge_support):
            if token not in KNOWLEDGE_SUPPORT:
                raise ValidationError(
                    "knowledge_support", token, f"must be a subset of {KNOWLEDGE_SUPPORT}"
                )
        for token in sorted(self.financial_support):
            if token not in FINANCIAL_SUPPORT:
                raise ValidationError(
                    "financial_support", token, f"must be a subset of {FINANCIAL_SUPPORT}"
                )
        _check_number(self, "firm_age_years", low=0.0)
        _check_int(self, "competitor_count", low=0)
        if self.competitor_proximity_mean is not None:
            _check_number(self, "competitor_proximity_mean", low=0.0, high=1.0)
        _check_number(self, "capital_raised_usd", low=0.0)
        _check_int(self, "team_size", low=1)
        _check_int(self, "team_field_backgrounds", low=1)
        _check_int(self, "pilot_customers", low=0)
        _check_number(self, "web_visits", low=0.0)
        _check_number(self, "web_avg_duration_s", low=0.0)
        _check_number(self, "web_backlinks", low=0.0)
        _check_number(self, "web_bounce_rate", low=0.0, high=1.0)
        _check_int(self, "twitter_followers", low=0)
        _check_int(self, "tweet_count", low=0)
        _check_number(self, "tweet_sentiment", low=-1.0, high=1.0)
        for name in ("proof_of_concept", "entrepreneurial_experience"):
            if not isinstance(getattr(self, name), bool):
                raise ValidationError(name, getattr(self, name), "must be a boolean")
        if self.label_series_a is not None and not isinstance(self.label_series_a, bool):
            raise ValidationError("label_series_a", self.label_series_a, "must be boolean or absent")


# Column order of the CSV interchange format; also the canonical field order.
FIELD_NAMES: tuple[str, ...] = tuple(f.name for f in fields(StartupRecord))


def _check_vocab(record: StartupRecord, name: str, vocab: tuple[str, ...]) -> None:
    value = getattr(record, name)
    if value not in vocab:
        raise ValidationError(name, value, f"must be one of {vocab}")


def _check_number(record: StartupRecord, name: str, low: float, high: float | None = None) -> None:
    value = getattr(record, name)
    if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
        raise ValidationError(name, value, "must be a finite number")
    if value < low:
        raise ValidationError(name, value, f"must be >= {low}")
    if high is not None and value > high:
        raise ValidationError(name, value, f"must be <= {high}")


def _check_int(record: StartupRecord, name: str, low: int) -> None:
    value = getattr(record, name)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(name, value, "must be an integer")
    if value < low:
        raise ValidationError(name, value, f"must be >= {low}")


def validate_dataset(records: list[StartupRecord], schema: TaxonomySchema) -> None:
    """Validate every record and the dataset-wide id uniqueness invariant."""
    seen: set[str] = set()
    for record in records:
        record.validate(schema)
        if record.id in seen:
            raise ValidationError("id", record.id, "must be unique within a dataset")
        seen.add(record.id)
