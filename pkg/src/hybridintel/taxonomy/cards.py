"""Crowd-readable startup cards.

Each card renders all 21 signals, grouped into the five taxonomy
categories, with a per-signal format tag. "Graphic and Textual" entries
are rendered as structured text (no image generation). The outcome label
is never included: raters must stay blind to ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .records import StartupRecord
from .schema import DEFAULT_SCHEMA, EDUCATION_LEVELS, HYPE_PHASES

TEXTUAL = "Textual"
NUMERIC = "Numeric"
GRAPHIC_AND_TEXTUAL = "Graphic and Textual"
NUMERIC_AND_TEXTUAL = "Numeric and Textual"

CATEGORIES = (
    "Meta",
    "Value Proposition",
    "Market",
    "Resources",
    "Commitment of 3-Party Support",
)

NOT_PROVIDED = "not provided"


@dataclass(frozen=True)
class CardEntry:
    signal: str
    format: str
    content: str


@dataclass(frozen=True)
class CardSection:
    category: str
    entries: tuple[CardEntry, ...]


@dataclass(frozen=True)
class CrowdCard:
    record_id: str
    schema_version: str
    sections: tuple[CardSection, ...]

    def entry_count(self) -> int:
        return sum(len(s.entries) for s in self.sections)

    def to_wire(self) -> dict:
        return {
            "record_id": self.record_id,
            "schema_version": self.schema_version,
            "sections": [
                {
                    "category": s.category,
                    "entries": [
                        {"signal": e.signal, "format": e.format, "content": e.content}
                        for e in s.entries
                    ],
                }
                for s in self.sections
            ],
        }


def _text_or_absent(text: str) -> str:
    return text if text.strip() else NOT_PROVIDED


def _hype(r: StartupRecord) -> str:
    phase = HYPE_PHASES.index(r.tech_hype_phase) + 1
    return f"hype cycle phase {phase} of 5: {r.tech_hype_phase}"


def _competition(r: StartupRecord) -> str:
    base = f"{r.competitor_count} known competitors"
    if r.competitor_proximity_mean is None:
        return f"{base}; mean competitor proximity {NOT_PROVIDED}"
    return (
        f"{base}; mean competitor proximity {r.competitor_proximity_mean:.2f} "
        "(0 = distant, 1 = head-on)"
    )


def _education(r: StartupRecord) -> str:
    level = EDUCATION_LEVELS.index(r.education_level) + 1
    return f"highest founder degree: {r.education_level} (level {level} of {len(EDUCATION_LEVELS)})"


def _support(values: frozenset[str], vocab: tuple[str, ...]) -> str:
    present = [v for v in vocab if v in values]
    return "; ".join(present) if present else "none"


def _web(r: StartupRecord) -> str:
    return (
        f"{r.web_visits:,.0f} website visits; average visit {r.web_avg_duration_s:.0f} s; "
        f"{r.web_backlinks:,.0f} backlinks; bounce rate {r.web_bounce_rate:.0%}"
    )


def _social(r: StartupRecord) -> str:
    return (
        f"{r.twitter_followers:,} Twitter followers; {r.tweet_count:,} tweets; "
        f"tweet sentiment {r.tweet_sentiment:+.2f} on a -1..+1 scale"
    )


# signal name, category, crowd-readable format tag, renderer
_SIGNALS: tuple[tuple[str, str, str, Callable[[StartupRecord], str]], ...] = (
    ("B2B vs B2C", "Meta", TEXTUAL, lambda r: r.b2b_b2c),
    ("Industry", "Meta", TEXTUAL, lambda r: r.industry),
    ("Firm Age", "Meta", NUMERIC, lambda r: f"{r.firm_age_years:g} years"),
    ("Business Model DNA", "Meta", TEXTUAL, lambda r: r.business_model_dna),
    ("Product Innovativeness", "Value Proposition", GRAPHIC_AND_TEXTUAL,
     lambda r: _text_or_absent(r.product_innovativeness_text)),
    ("Technological Hype", "Value Proposition", GRAPHIC_AND_TEXTUAL, _hype),
    ("Proof of Concept", "Value Proposition", TEXTUAL,
     lambda r: "working prototype exists" if r.proof_of_concept else "no prototype yet"),
    ("Scalability", "Value Proposition", TEXTUAL,
     lambda r: _text_or_absent(r.scalability_text)),
    ("Competition", "Market", GRAPHIC_AND_TEXTUAL, _competition),
    ("Revenue Model", "Market", TEXTUAL, lambda r: r.revenue_model),
    ("Capital Raised", "Resources", NUMERIC, lambda r: f"{r.capital_raised_usd:,.0f} USD"),
    ("Team Size", "Resources", NUMERIC, lambda r: f"{r.team_size} team members"),
    ("Team Constellation", "Resources", TEXTUAL,
     lambda r: f"{r.team_field_backgrounds} distinct field backgrounds on the team"),
    ("Entrepreneurial Experience", "Resources", TEXTUAL,
     lambda r: "founders have previously founded ventures" if r.entrepreneurial_experience
     else "no previously founded ventures"),
    ("Entrepreneurial Vision", "Resources", TEXTUAL,
     lambda r: _text_or_absent(r.vision_text)),
    ("Entrepreneurial Education", "Resources", GRAPHIC_AND_TEXTUAL, _education),
    ("Knowledge Support", "Commitment of 3-Party Support", TEXTUAL,
     lambda r: _support(r.knowledge_support, ("incubator", "accelerator", "business angel",
                                              "university"))),
    ("Financial Support", "Commitment of 3-Party Support", TEXTUAL,
     lambda r: _support(r.financial_support, ("state support", "equity backed",
                                              "bank financing"))),
    ("Proof of Value", "Commitment of 3-Party Support", NUMERIC_AND_TEXTUAL,
     lambda r: f"{r.pilot_customers} pilot customers"),
    ("Web Analytics", "Commitment of 3-Party Support", NUMERIC_AND_TEXTUAL, _web),
    ("Social Media Analytics", "Commitment of 3-Party Support", NUMERIC_AND_TEXTUAL, _social),
)

SIGNAL_FORMATS: dict[str, str] = {name: fmt for name, _, fmt, _ in _SIGNALS}


def render_card(record: StartupRecord) -> CrowdCard:
    """Render one record as a crowd card (record assumed valid)."""
    sections = []
    for category in CATEGORIES:
        entries = tuple(
            CardEntry(signal=name, format=fmt, content=render(record))
            for name, cat, fmt, render in _SIGNALS
            if cat == category
        )
        sections.append(CardSection(category=category, entries=entries))
    return CrowdCard(
        record_id=record.id,
        schema_version=DEFAULT_SCHEMA.version,
        sections=tuple(sections),
    )
