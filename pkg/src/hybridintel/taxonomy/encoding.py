"""Hard-signal encoding into numeric feature vectors.

Closed-vocabulary categoricals become one-hot dummies, booleans become
{0,1}, education becomes an ordinal integer, the set-valued support
fields become one dummy per vocabulary member, and numeric signals are
z-scored against training-fold statistics. The optional proximity signal
additionally emits a missingness dummy. Soft-signal texts and the label
never appear here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import EncodingError
from .records import StartupRecord
from .schema import (
    B2B_B2C,
    BUSINESS_MODEL_DNA,
    EDUCATION_LEVELS,
    FINANCIAL_SUPPORT,
    HYPE_PHASES,
    KNOWLEDGE_SUPPORT,
    REVENUE_MODELS,
    DEFAULT_SCHEMA,
    TaxonomySchema,
)

# z-scored numeric signals, in record-field order
NUMERIC_FIELDS: tuple[str, ...] = (
    "firm_age_years",
    "competitor_count",
    "competitor_proximity_mean",
    "capital_raised_usd",
    "team_size",
    "team_field_backgrounds",
    "pilot_customers",
    "web_visits",
    "web_avg_duration_s",
    "web_backlinks",
    "web_bounce_rate",
    "twitter_followers",
    "tweet_count",
    "tweet_sentiment",
)

OPTIONAL_NUMERIC_FIELDS: tuple[str, ...] = ("competitor_proximity_mean",)

_ONE_HOT: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("b2b_b2c", B2B_B2C),
    ("business_model_dna", BUSINESS_MODEL_DNA),
    ("tech_hype_phase", HYPE_PHASES),
    ("revenue_model", REVENUE_MODELS),
)

_MULTI_HOT: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("knowledge_support", KNOWLEDGE_SUPPORT),
    ("financial_support", FINANCIAL_SUPPORT),
)

_BOOL_FIELDS: tuple[str, ...] = ("proof_of_concept", "entrepreneurial_experience")


@dataclass(frozen=True)
class FeatureVector:
    """Encoded record: parallel names/values, free of NaNs by construction."""

    record_id: str
    names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        if len(self.names) != len(self.values):
            raise EncodingError(
                f"feature names/values length mismatch for record {self.record_id!r}"
            )
        if not np.all(np.isfinite(self.values)):
            raise EncodingError(f"non-finite feature value for record {self.record_id!r}")


@dataclass(frozen=True)
class EncoderStats:
    """Training-fold means and population deviations for the numeric signals.

    A zero deviation marks a constant feature; it encodes to 0 rather
    than raising.
    """

    means: dict[str, float]
    stds: dict[str, float]

    def __post_init__(self) -> None:
        missing = set(NUMERIC_FIELDS) - set(self.means)
        if missing or set(NUMERIC_FIELDS) - set(self.stds):
            raise EncodingError(f"encoder stats missing numeric fields: {sorted(missing)}")

    def to_obj(self) -> dict[str, dict[str, float]]:
        return {
            "means": {k: self.means[k] for k in NUMERIC_FIELDS},
            "stds": {k: self.stds[k] for k in NUMERIC_FIELDS},
        }

    @classmethod
    def from_obj(cls, obj: dict[str, dict[str, float]]) -> "EncoderStats":
        return cls(means=dict(obj["means"]), stds=dict(obj["stds"]))


def fit_encoder_stats(records: Sequence[StartupRecord],
                      schema: TaxonomySchema = DEFAULT_SCHEMA) -> EncoderStats:
    """Fit numeric means/deviations. Call on training-fold records only."""
    if not records:
        raise EncodingError("cannot fit encoder stats on an empty record set")
    means: dict[str, float] = {}
    stds: dict[str, float] = {}
    for name in NUMERIC_FIELDS:
        values = np.array(
            [getattr(r, name) for r in records if getattr(r, name) is not None],
            dtype=np.float64,
        )
        if values.size == 0:
            means[name] = 0.0
            stds[name] = 0.0
            continue
        means[name] = float(values.mean())
        stds[name] = float(values.std())  # population deviation (ddof=0)
    return EncoderStats(means=means, stds=stds)


def feature_names(schema: TaxonomySchema = DEFAULT_SCHEMA) -> tuple[str, ...]:
    """Deterministic feature name list for a schema; shared by all records."""
    names: list[str] = []
    names.extend(f"b2b_b2c={v}" for v in B2B_B2C)
    names.extend(f"industry={v}" for v in schema.industries)
    names.append("firm_age_years")
    names.extend(f"business_model_dna={v}" for v in BUSINESS_MODEL_DNA)
    names.extend(f"tech_hype_phase={v}" for v in HYPE_PHASES)
    names.append("proof_of_concept")
    names.append("competitor_count")
    names.append("competitor_proximity_mean")
    names.append("competitor_proximity_mean__missing")
    names.extend(f"revenue_model={v}" for v in REVENUE_MODELS)
    names.append("capital_raised_usd")
    names.append("team_size")
    names.append("team_field_backgrounds")
    names.append("entrepreneurial_experience")
    names.append("education_level")
    names.extend(f"knowledge_support={v}" for v in KNOWLEDGE_SUPPORT)
    names.extend(f"financial_support={v}" for v in FINANCIAL_SUPPORT)
    names.append("pilot_customers")
    names.append("web_visits")
    names.append("web_avg_duration_s")
    names.append("web_backlinks")
    names.append("web_bounce_rate")
    names.append("twitter_followers")
    names.append("tweet_count")
    names.append("tweet_sentiment")
    return tuple(names)


def standardized_feature_names(schema: TaxonomySchema = DEFAULT_SCHEMA) -> tuple[str, ...]:
    """The subset of feature names that are z-scored numerics."""
    return NUMERIC_FIELDS


def encode_features(records: Sequence[StartupRecord], stats: EncoderStats,
                    schema: TaxonomySchema = DEFAULT_SCHEMA) -> list[FeatureVector]:
    """Encode records against training-fold ``stats``.

    Raises EncodingError for categorical values outside the schema
    vocabulary (possible when encoding against a narrower schema than
    the records were validated with).
    """
    names = feature_names(schema)
    vectors = []
    for record in records:
        vectors.append(FeatureVector(record.id, names, _encode_one(record, stats, schema)))
    return vectors


def _z(value: float, name: str, stats: EncoderStats) -> float:
    std = stats.stds[name]
    if std <= 0.0:
        return 0.0
    return (value - stats.means[name]) / std


def _encode_one(record: StartupRecord, stats: EncoderStats,
                schema: TaxonomySchema) -> np.ndarray:
    out: list[float] = []
    out.extend(_one_hot(record, "b2b_b2c", B2B_B2C))
    out.extend(_one_hot(record, "industry", schema.industries))
    out.append(_z(record.firm_age_years, "firm_age_years", stats))
    out.extend(_one_hot(record, "business_model_dna", BUSINESS_MODEL_DNA))
    out.extend(_one_hot(record, "tech_hype_phase", HYPE_PHASES))
    out.append(1.0 if record.proof_of_concept else 0.0)
    out.append(_z(float(record.competitor_count), "competitor_count", stats))
    if record.competitor_proximity_mean is None:
        out.append(0.0)  # training-fold mean, standardized
        out.append(1.0)
    else:
        out.append(_z(record.competitor_proximity_mean, "competitor_proximity_mean", stats))
        out.append(0.0)
    out.extend(_one_hot(record, "revenue_model", REVENUE_MODELS))
    out.append(_z(record.capital_raised_usd, "capital_raised_usd", stats))
    out.append(_z(float(record.team_size), "team_size", stats))
    out.append(_z(float(record.team_field_backgrounds), "team_field_backgrounds", stats))
    out.append(1.0 if record.entrepreneurial_experience else 0.0)
    if record.education_level not in EDUCATION_LEVELS:
        raise EncodingError(
            f"record {record.id!r}: education_level value "
            f"{record.education_level!r} outside vocabulary"
        )
    out.append(float(EDUCATION_LEVELS.index(record.education_level)))
    out.extend(1.0 if v in record.knowledge_support else 0.0 for v in KNOWLEDGE_SUPPORT)
    out.extend(1.0 if v in record.financial_support else 0.0 for v in FINANCIAL_SUPPORT)
    out.append(_z(float(record.pilot_customers), "pilot_customers", stats))
    out.append(_z(record.web_visits, "web_visits", stats))
    out.append(_z(record.web_avg_duration_s, "web_avg_duration_s", stats))
    out.append(_z(record.web_backlinks, "web_backlinks", stats))
    out.append(_z(record.web_bounce_rate, "web_bounce_rate", stats))
    out.append(_z(float(record.twitter_followers), "twitter_followers", stats))
    out.append(_z(float(record.tweet_count), "tweet_count", stats))
    out.append(_z(record.tweet_sentiment, "tweet_sentiment", stats))
    return np.array(out, dtype=np.float64)


def _one_hot(record: StartupRecord, name: str, vocab: Sequence[str]) -> list[float]:
    value = getattr(record, name)
    if value not in vocab:
        raise EncodingError(
            f"record {record.id!r}: {name} value {value!r} outside vocabulary"
        )
    return [1.0 if value == v else 0.0 for v in vocab]


def feature_matrix(vectors: Sequence[FeatureVector]) -> tuple[np.ndarray, tuple[str, ...]]:
    """Stack vectors into an (n, d) matrix, checking name consistency."""
    if not vectors:
        raise EncodingError("cannot build a matrix from zero feature vectors")
    names = vectors[0].names
    for vec in vectors:
        if vec.names != names:
            raise EncodingError(
                f"feature name mismatch between records {vectors[0].record_id!r} "
                f"and {vec.record_id!r}"
            )
    return np.stack([v.values for v in vectors]), names
