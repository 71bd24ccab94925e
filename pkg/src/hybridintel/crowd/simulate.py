"""Synthetic rater panels.

Each simulated rater perceives a startup's latent quality q in [0, 1]
through an additive personal bias and Gaussian noise, then rates each
dimension as clamp(round(1 + 6*(q + bias + eps)), 1, 7) with a fresh
noise draw per dimension. Noise draws come from a stream seeded by
(rater seed, record id), so a judgment does not depend on panel
composition or iteration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from typing import Sequence

import numpy as np

from ..errors import ConfigError
from ..seeding import stable_id_hash
from ..taxonomy.records import StartupRecord
from .judgments import DIMENSIONS, Judgment, PanelConfig, RATER_CLASSES

# fixed epoch keeps simulated judgment files reproducible
_SIM_EPOCH = datetime(2026, 1, 1, tzinfo=timezone.utc)


@dataclass(frozen=True)
class RaterModel:
    """One simulated rater: class, additive bias, noise level, seed."""

    rater_id: str
    rater_class: str
    bias: float
    noise_sd: float
    seed: int

    def __post_init__(self) -> None:
        if self.rater_class not in RATER_CLASSES:
            raise ConfigError(f"unknown rater class {self.rater_class!r}")
        if self.noise_sd < 0:
            raise ConfigError(f"noise_sd must be >= 0, got {self.noise_sd}")


@dataclass(frozen=True)
class RaterPoolConfig:
    """Sizes and quality levels for a simulated rater pool.

    Defaults keep experts less noisy than non-experts, the analogue of
    restricting the expert call to domain specialists.
    """

    n_nonexpert: int = 60
    n_expert: int = 15
    nonexpert_noise_sd: float = 0.30
    expert_noise_sd: float = 0.12
    nonexpert_bias_sd: float = 0.08
    expert_bias_sd: float = 0.04
    seed: int = 0

    def build(self) -> list[RaterModel]:
        rng = np.random.default_rng(self.seed)
        raters = []
        for i in range(self.n_nonexpert):
            raters.append(RaterModel(
                rater_id=f"ne-{i:04d}", rater_class="nonexpert",
                bias=float(rng.normal(0.0, self.nonexpert_bias_sd)),
                noise_sd=self.nonexpert_noise_sd,
                seed=int(rng.integers(0, 2**63 - 1)),
            ))
        for i in range(self.n_expert):
            raters.append(RaterModel(
                rater_id=f"ex-{i:04d}", rater_class="expert",
                bias=float(rng.normal(0.0, self.expert_bias_sd)),
                noise_sd=self.expert_noise_sd,
                seed=int(rng.integers(0, 2**63 - 1)),
            ))
        return raters

    def to_obj(self) -> dict:
        return {
            "n_nonexpert": self.n_nonexpert,
            "n_expert": self.n_expert,
            "nonexpert_noise_sd": self.nonexpert_noise_sd,
            "expert_noise_sd": self.expert_noise_sd,
            "nonexpert_bias_sd": self.nonexpert_bias_sd,
            "expert_bias_sd": self.expert_bias_sd,
            "seed": self.seed,
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "RaterPoolConfig":
        return cls(**obj)


def rate_once(quality: float, rater: RaterModel, record_id: str) -> dict[str, int]:
    """One rater's three-dimension rating of one latent quality."""
    rng = np.random.default_rng([rater.seed, stable_id_hash(record_id)])
    if rater.noise_sd > 0:
        eps = rng.normal(0.0, rater.noise_sd, size=len(DIMENSIONS))
    else:
        eps = np.zeros(len(DIMENSIONS))
    base = quality + rater.bias
    return {
        dim: int(min(7, max(1, math.floor(1.0 + 6.0 * (base + eps[i]) + 0.5))))
        for i, dim in enumerate(DIMENSIONS)
    }


def simulate_crowd(records: Sequence[StartupRecord],
                   latent_quality: dict[str, float],
                   raters: Sequence[RaterModel],
                   config: PanelConfig,
                   seed: int = 0) -> list[Judgment]:
    """Simulate panels for every record; deterministic given all seeds."""
    missing = [r.id for r in records if r.id not in latent_quality]
    if missing:
        raise ConfigError(f"records without latent quality: {missing[:5]}")

    eligible = list(raters)
    if config.max_rater_noise_sd is not None:
        eligible = [r for r in eligible if r.noise_sd <= config.max_rater_noise_sd]

    pools = {c: [r for r in eligible if r.rater_class == c] for c in RATER_CLASSES}
    for rater_class in RATER_CLASSES:
        lo, _ = config.bounds(rater_class)
        if len(pools[rater_class]) < lo:
            raise ConfigError(
                f"{len(pools[rater_class])} eligible {rater_class} raters; "
                f"panels need at least {lo}"
            )

    panel_rng = np.random.default_rng(seed)
    judgments: list[Judgment] = []
    tick = 0
    for record in records:
        quality = float(latent_quality[record.id])
        for rater_class in RATER_CLASSES:
            lo, hi = config.bounds(rater_class)
            pool = pools[rater_class]
            size = int(panel_rng.integers(lo, min(hi, len(pool)) + 1))
            members = panel_rng.choice(len(pool), size=size, replace=False)
            for index in sorted(int(m) for m in members):
                rater = pool[index]
                judgments.append(Judgment(
                    rater_id=rater.rater_id,
                    rater_class=rater.rater_class,
                    record_id=record.id,
                    ratings=rate_once(quality, rater, record.id),
                    submitted_at=_SIM_EPOCH + timedelta(seconds=tick),
                ))
                tick += 1
    return judgments
