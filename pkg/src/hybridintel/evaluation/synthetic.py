"""Synthetic labeled startup datasets with a planted outcome model.

Latent quality per record:

    q = sigmoid(logit(base_rate) + sum_j beta_j * z_j + s * u + noise)

where z_j are empirically standardized hard signals (the planted
coefficients), u ~ N(0, 1) is a soft factor visible only through the
free-text fields and the raters' perception, and s is the soft-channel
strength. Labels are Bernoulli(q). Soft-signal texts are templated
strings whose tier tracks u, so a (simulated or human) reader can
recover signal the machine features do not carry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
import numpy as np

from ..crowd.judgments import PanelConfig
from ..crowd.simulate import RaterPoolConfig
from ..errors import ConfigError
from ..seeding import rng_for
from ..taxonomy.records import StartupRecord
from ..taxonomy.schema import (
    B2B_B2C,
    BUSINESS_MODEL_DNA,
    DEFAULT_SCHEMA,
    EDUCATION_LEVELS,
    FINANCIAL_SUPPORT,
    HYPE_PHASES,
    KNOWLEDGE_SUPPORT,
    REVENUE_MODELS,
    TaxonomySchema,
)

# hard signals a planted coefficient may attach to
PLANTABLE_FEATURES = (
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
    "proof_of_concept",
    "entrepreneurial_experience",
    "education_level",
)


@dataclass(frozen=True)
class SyntheticConfig:
    """Generator settings: planted structure, rater pool, panel bounds."""

    n_records: int
    seed: int = 0
    base_rate: float = 0.6
    hard_coefficients: dict[str, float] = field(default_factory=dict)
    soft_strength: float = 0.0
    latent_noise_sd: float = 0.0
    proximity_missing_rate: float = 0.15
    k: int = 10
    rater_pool: RaterPoolConfig = field(default_factory=RaterPoolConfig)
    panel: PanelConfig = field(default_factory=PanelConfig)

    def __post_init__(self) -> None:
        if self.n_records < 10 * self.k:
            raise ConfigError(
                f"n_records must be >= 10*k = {10 * self.k}, got {self.n_records}"
            )
        if not 0.0 < self.base_rate < 1.0:
            raise ConfigError(f"base_rate must lie in (0, 1), got {self.base_rate}")
        for name, value in self.hard_coefficients.items():
            if name not in PLANTABLE_FEATURES:
                raise ConfigError(f"unknown planted feature {name!r}")
            if not math.isfinite(value):
                raise ConfigError(f"planted coefficient for {name!r} must be finite")
        if not math.isfinite(self.soft_strength):
            raise ConfigError("soft_strength must be finite")
        if self.latent_noise_sd < 0 or not math.isfinite(self.latent_noise_sd):
            raise ConfigError("latent_noise_sd must be a finite nonnegative number")
        if not 0.0 <= self.proximity_missing_rate < 1.0:
            raise ConfigError("proximity_missing_rate must lie in [0, 1)")

    def to_obj(self) -> dict:
        return {
            "n_records": self.n_records,
            "seed": self.seed,
            "base_rate": self.base_rate,
            "hard_coefficients": dict(self.hard_coefficients),
            "soft_strength": self.soft_strength,
            "latent_noise_sd": self.latent_noise_sd,
            "proximity_missing_rate": self.proximity_missing_rate,
            "k": self.k,
            "rater_pool": self.rater_pool.to_obj(),
            "panel": {
                "nonexpert_min": self.panel.nonexpert_min,
                "nonexpert_max": self.panel.nonexpert_max,
                "expert_min": self.panel.expert_min,
                "expert_max": self.panel.expert_max,
                "max_rater_noise_sd": self.panel.max_rater_noise_sd,
            },
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "SyntheticConfig":
        obj = dict(obj)
        if "rater_pool" in obj:
            obj["rater_pool"] = RaterPoolConfig.from_obj(obj["rater_pool"])
        if "panel" in obj:
            obj["panel"] = PanelConfig(**obj["panel"])
        return cls(**obj)


# tier 0 (weak) to tier 3 (strong); one bank per soft-signal field
_INNOVATIVENESS_TIERS = (
    ("Largely replicates offerings already on the market; differentiation is cosmetic.",
     "A me-too product in a crowded category with no standout capability.",
     "Feature set mirrors incumbent tools; little that competitors could not copy in weeks."),
    ("Incremental improvements over existing solutions; substitutes remain easy to find.",
     "Useful refinements on a familiar product pattern, without a deep moat.",
     "Solid execution of a known concept with one or two novel touches."),
    ("Clearly differentiated offering with defensible technical depth.",
     "A novel combination of proven components that competitors would struggle to match.",
     "Distinctive product with early evidence that users switch for it."),
    ("First-of-its-kind approach; no direct substitute exists today.",
     "Breakthrough capability that redefines what buyers expect in the category.",
     "Genuinely new technology with a wide lead over any known alternative."),
)

_SCALABILITY_TIERS = (
    ("Growth requires near-linear headcount; delivery is effectively a service business.",
     "Each new customer adds heavy onboarding and bespoke work.",
     "Unit economics degrade as volume grows; infrastructure costs rise with every account."),
    ("Scaling is possible but operationally heavy; margins improve only slowly with volume.",
     "Repeatable delivery playbook, though regional rollouts still need dedicated teams.",
     "Moderate automation; some manual steps remain on the critical path."),
    ("Mostly self-serve product with marginal cost per added customer close to zero.",
     "Cloud-native delivery scales to new markets without proportional hiring.",
     "Strong operating leverage; support load grows far slower than revenue."),
    ("Pure software distribution with network effects compounding adoption.",
     "Viral, self-serve growth loop already evident in cohort data.",
     "Near-zero marginal cost and demand that accelerates with each new user."),
)

_VISION_TIERS = (
    ("Founders describe next quarter's features but no larger destination.",
     "Roadmap is a list of patches; the team hesitates on where the market goes.",
     "Vision statement restates the current product without ambition beyond it."),
    ("A plausible three-year plan, though contingent on following incumbents' moves.",
     "Clear near-term goals with a loosely sketched longer arc.",
     "Sensible direction, albeit one several competitors articulate equally well."),
    ("A sharp thesis on how the market shifts and why this team wins that shift.",
     "Credible multi-stage plan from beachhead to platform.",
     "Founders articulate a distinct end-state and the sequencing to reach it."),
    ("A category-defining ambition backed by concrete stepping stones.",
     "The team reframes the industry's economics and has early proof the frame holds.",
     "An audacious, internally consistent picture of the market a decade out."),
)

_SOFT_TEXT_BANKS = {
    "product_innovativeness_text": _INNOVATIVENESS_TIERS,
    "scalability_text": _SCALABILITY_TIERS,
    "vision_text": _VISION_TIERS,
}

# quartile cuts of a standard normal
_TIER_CUTS = (-0.6744897501960817, 0.0, 0.6744897501960817)


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 1.0 / (1.0 + np.exp(-z))


def generate_synthetic_dataset(
    config: SyntheticConfig,
    schema: TaxonomySchema = DEFAULT_SCHEMA,
) -> tuple[list[StartupRecord], dict[str, float]]:
    """Generate records plus the latent quality map raters perceive."""
    n = config.n_records
    rng = rng_for(config.seed, "fields")
    rng_soft = rng_for(config.seed, "soft")
    rng_label = rng_for(config.seed, "labels")

    ids = [f"su-{i + 1:05d}" for i in range(n)]

    b2b = rng.choice(len(B2B_B2C), size=n, p=[0.45, 0.40, 0.15])
    industry = rng.integers(0, len(schema.industries), size=n)
    firm_age = np.round(rng.gamma(shape=2.0, scale=1.1, size=n), 2)
    dna = rng.integers(0, len(BUSINESS_MODEL_DNA), size=n)
    hype = rng.choice(len(HYPE_PHASES), size=n, p=[0.22, 0.30, 0.22, 0.16, 0.10])
    poc = rng.random(n) < 0.55
    competitors = rng.poisson(6.0, size=n)
    proximity = np.round(rng.beta(2.0, 2.0, size=n), 4)
    proximity_missing = rng.random(n) < config.proximity_missing_rate
    revenue = rng.integers(0, len(REVENUE_MODELS), size=n)
    capital = np.round(rng.lognormal(mean=11.5, sigma=1.0, size=n), 2)
    team = 1 + rng.poisson(3.0, size=n)
    backgrounds = 1 + rng.binomial(np.maximum(team - 1, 0), 0.35)
    experience = rng.random(n) < 0.35
    education = rng.choice(len(EDUCATION_LEVELS), size=n, p=[0.10, 0.35, 0.40, 0.15])
    knowledge = rng.random((n, len(KNOWLEDGE_SUPPORT))) < 0.25
    financial = rng.random((n, len(FINANCIAL_SUPPORT))) < 0.20
    pilots = rng.poisson(8.0, size=n)
    web_visits = np.round(rng.lognormal(mean=8.0, sigma=1.2, size=n), 0)
    web_duration = np.round(rng.lognormal(mean=4.3, sigma=0.5, size=n), 1)
    web_backlinks = rng.poisson(40.0, size=n).astype(np.float64)
    web_bounce = np.round(rng.beta(5.0, 4.0, size=n), 4)
    followers = rng.poisson(900.0, size=n) + rng.poisson(80.0, size=n) * 10
    tweets = rng.poisson(120.0, size=n)
    sentiment = np.round(np.clip(rng.normal(0.15, 0.30, size=n), -1.0, 1.0), 4)

    hard_values = {
        "firm_age_years": firm_age,
        "competitor_count": competitors.astype(np.float64),
        "competitor_proximity_mean": np.where(proximity_missing, np.nan, proximity),
        "capital_raised_usd": capital,
        "team_size": team.astype(np.float64),
        "team_field_backgrounds": backgrounds.astype(np.float64),
        "pilot_customers": pilots.astype(np.float64),
        "web_visits": web_visits,
        "web_avg_duration_s": web_duration,
        "web_backlinks": web_backlinks,
        "web_bounce_rate": web_bounce,
        "twitter_followers": followers.astype(np.float64),
        "tweet_count": tweets.astype(np.float64),
        "tweet_sentiment": sentiment,
        "proof_of_concept": poc.astype(np.float64),
        "entrepreneurial_experience": experience.astype(np.float64),
        "education_level": education.astype(np.float64),
    }

    eta = np.full(n, _logit(config.base_rate))
    for name, beta in config.hard_coefficients.items():
        if beta == 0.0:
            continue
        eta += beta * _standardize(hard_values[name])

    u = rng_soft.normal(0.0, 1.0, size=n)
    eta += config.soft_strength * u
    if config.latent_noise_sd > 0:
        eta += rng_soft.normal(0.0, config.latent_noise_sd, size=n)

    quality = _sigmoid(eta)
    labels = rng_label.random(n) < quality

    records = []
    for i in range(n):
        texts = {}
        for fname, bank in _SOFT_TEXT_BANKS.items():
            blurred = (u[i] + 0.4 * rng_soft.normal()) / math.sqrt(1.0 + 0.16)
            tier = int(np.searchsorted(_TIER_CUTS, blurred))
            texts[fname] = bank[tier][int(rng_soft.integers(0, len(bank[tier])))]
        records.append(StartupRecord(
            id=ids[i],
            b2b_b2c=B2B_B2C[b2b[i]],
            industry=schema.industries[industry[i]],
            firm_age_years=float(firm_age[i]),
            business_model_dna=BUSINESS_MODEL_DNA[dna[i]],
            tech_hype_phase=HYPE_PHASES[hype[i]],
            proof_of_concept=bool(poc[i]),
            competitor_count=int(competitors[i]),
            competitor_proximity_mean=None if proximity_missing[i] else float(proximity[i]),
            revenue_model=REVENUE_MODELS[revenue[i]],
            capital_raised_usd=float(capital[i]),
            team_size=int(team[i]),
            team_field_backgrounds=int(backgrounds[i]),
            entrepreneurial_experience=bool(experience[i]),
            education_level=EDUCATION_LEVELS[education[i]],
            knowledge_support=frozenset(
                tok for j, tok in enumerate(KNOWLEDGE_SUPPORT) if knowledge[i, j]
            ),
            financial_support=frozenset(
                tok for j, tok in enumerate(FINANCIAL_SUPPORT) if financial[i, j]
            ),
            pilot_customers=int(pilots[i]),
            web_visits=float(web_visits[i]),
            web_avg_duration_s=float(web_duration[i]),
            web_backlinks=float(web_backlinks[i]),
            web_bounce_rate=float(web_bounce[i]),
            twitter_followers=int(followers[i]),
            tweet_count=int(tweets[i]),
            tweet_sentiment=float(sentiment[i]),
            product_innovativeness_text=texts["product_innovativeness_text"],
            scalability_text=texts["scalability_text"],
            vision_text=texts["vision_text"],
            label_series_a=bool(labels[i]),
        ))

    latent_quality = {ids[i]: float(quality[i]) for i in range(n)}
    return records, latent_quality


def _logit(p: float) -> float:
    return math.log(p / (1.0 - p))


def _standardize(values: np.ndarray) -> np.ndarray:
    """Empirical z-score; NaNs (missing optionals) standardize to 0."""
    present = ~np.isnan(values)
    mean = values[present].mean()
    std = values[present].std()
    if std <= 0:
        return np.zeros_like(values)
    z = (values - mean) / std
    z[~present] = 0.0
    return z


def reference_config(n_records: int = 1000, seed: int = 0) -> SyntheticConfig:
    """The calibrated reference experiment.

    Hard signals carry most of the outcome; a moderate soft channel is
    readable only through the raters. Individual raters are very noisy
    (and personally biased), so a single judge is nearly useless while a
    16-20 panel still extracts the soft signal: the regime where neither
    the machines nor the crowd dominate, and fusing both pays.
    """
    return SyntheticConfig(
        n_records=n_records,
        seed=seed,
        base_rate=0.5,
        hard_coefficients=dict(_REFERENCE_HARD_COEFFICIENTS),
        soft_strength=0.32,
        latent_noise_sd=0.10,
        rater_pool=RaterPoolConfig(
            n_nonexpert=60,
            n_expert=15,
            nonexpert_noise_sd=1.35,
            expert_noise_sd=1.00,
            nonexpert_bias_sd=0.32,
            expert_bias_sd=0.16,
            seed=1,
        ),
        panel=PanelConfig(),
    )


_REFERENCE_HARD_COEFFICIENTS: dict[str, float] = {
    "team_size": 0.70,
    "capital_raised_usd": 0.55,
    "pilot_customers": 0.55,
    "proof_of_concept": 0.60,
    "entrepreneurial_experience": 0.50,
    "education_level": 0.30,
    "competitor_count": -0.35,
    "web_visits": 0.45,
    "tweet_sentiment": 0.30,
    "web_bounce_rate": -0.25,
}
