"""Signal schema: vocabularies and the dataset schema version.

The schema is the contract shared by dataset files, feature encoding,
crowd cards, and the judgment service. Closed vocabularies are fixed;
the industry vocabulary is open and declared per schema instance.
"""

from __future__ import annotations

from dataclasses import dataclass

SCHEMA_VERSION = "startup-signals/1"

B2B_B2C = ("B2B", "B2C", "Both")

BUSINESS_MODEL_DNA = (
    "Freemium Platforms",
    "Experience Crowd Users",
    "Long Tail Subscribers",
    "Affiliate Markets",
    "Mass Customizing Orchestrators",
    "Innovative Platforms",
    "E-Commerce",
    "Add-On Layers",
    "Crowdsourcing Platforms",
    "Customized Layers",
    "Hidden Revenue Markets",
)

HYPE_PHASES = (
    "InnovationTrigger",
    "PeakOfExpectations",
    "TroughOfDisillusionment",
    "SlopeOfEnlightenment",
    "PlateauOfProductivity",
)

REVENUE_MODELS = (
    "commission-based",
    "fee-for-service",
    "advertising",
    "subscription",
    "referral",
    "production",
    "mark-up based",
    "other",
)

# Ordered low to high; the encoder maps these to 0..3.
EDUCATION_LEVELS = ("HighSchool", "Bachelor", "Master", "PhD")

KNOWLEDGE_SUPPORT = ("incubator", "accelerator", "business angel", "university")

FINANCIAL_SUPPORT = ("state support", "equity backed", "bank financing")

DEFAULT_INDUSTRIES = (
    "adtech",
    "biotech",
    "cleantech",
    "cybersecurity",
    "ecommerce",
    "edtech",
    "fintech",
    "gaming",
    "healthtech",
    "iot",
    "logistics",
    "mobility",
    "proptech",
    "saas",
)


@dataclass(frozen=True)
class TaxonomySchema:
    """Schema instance: fixed version plus the open industry vocabulary."""

    version: str = SCHEMA_VERSION
    industries: tuple[str, ...] = DEFAULT_INDUSTRIES

    def __post_init__(self) -> None:
        if not self.industries:
            raise ValueError("industry vocabulary must not be empty")
        object.__setattr__(self, "industries", tuple(self.industries))


DEFAULT_SCHEMA = TaxonomySchema()
