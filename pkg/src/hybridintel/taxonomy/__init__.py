"""Signal taxonomy: schema, records, dataset IO, feature encoding, crowd cards."""

from .cards import CATEGORIES, CardEntry, CardSection, CrowdCard, SIGNAL_FORMATS, render_card
from .dataset_io import dataset_to_csv_text, label_counts, parse_dataset, write_dataset
from .encoding import (
    NUMERIC_FIELDS,
    EncoderStats,
    FeatureVector,
    encode_features,
    feature_matrix,
    feature_names,
    fit_encoder_stats,
    standardized_feature_names,
)
from .records import FIELD_NAMES, StartupRecord, validate_dataset
from .schema import (
    B2B_B2C,
    BUSINESS_MODEL_DNA,
    DEFAULT_INDUSTRIES,
    DEFAULT_SCHEMA,
    EDUCATION_LEVELS,
    FINANCIAL_SUPPORT,
    HYPE_PHASES,
    KNOWLEDGE_SUPPORT,
    REVENUE_MODELS,
    SCHEMA_VERSION,
    TaxonomySchema,
)

__all__ = [
    "B2B_B2C",
    "BUSINESS_MODEL_DNA",
    "CATEGORIES",
    "CardEntry",
    "CardSection",
    "CrowdCard",
    "DEFAULT_INDUSTRIES",
    "DEFAULT_SCHEMA",
    "EDUCATION_LEVELS",
    "EncoderStats",
    "FIELD_NAMES",
    "FINANCIAL_SUPPORT",
    "FeatureVector",
    "HYPE_PHASES",
    "KNOWLEDGE_SUPPORT",
    "NUMERIC_FIELDS",
    "REVENUE_MODELS",
    "SCHEMA_VERSION",
    "SIGNAL_FORMATS",
    "StartupRecord",
    "TaxonomySchema",
    "dataset_to_csv_text",
    "encode_features",
    "feature_matrix",
    "feature_names",
    "fit_encoder_stats",
    "label_counts",
    "parse_dataset",
    "render_card",
    "standardized_feature_names",
    "validate_dataset",
    "write_dataset",
]
