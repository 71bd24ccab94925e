"""Prediction fusion: the unweighted baseline and three performance weightings.

Performance weighting assigns each pooled predictor the weight
max(MCC, 0) / sum, measured on held-in validation data; when every
clipped score is zero the pool falls back to equal weights. A predictor
with negative validation MCC therefore never receives inverted influence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .crowd.judgments import CROWD_PREDICTOR_IDS
from .errors import ConfigError
from .learners.base import MACHINE_PREDICTOR_IDS, ProbabilisticPrediction

UNWEIGHTED = "unweighted_average"
MACHINE_WEIGHTED = "machine_weighted"
CROWD_WEIGHTED = "crowd_weighted"
HYBRID_WEIGHTED = "hybrid_weighted"

STRATEGY_KINDS = (UNWEIGHTED, MACHINE_WEIGHTED, CROWD_WEIGHTED, HYBRID_WEIGHTED)

ALL_PREDICTOR_IDS = MACHINE_PREDICTOR_IDS + CROWD_PREDICTOR_IDS

_POOLS: dict[str, tuple[str, ...]] = {
    UNWEIGHTED: ALL_PREDICTOR_IDS,
    MACHINE_WEIGHTED: MACHINE_PREDICTOR_IDS,
    CROWD_WEIGHTED: CROWD_PREDICTOR_IDS,
    HYBRID_WEIGHTED: ALL_PREDICTOR_IDS,
}


@dataclass(frozen=True)
class AggregationStrategy:
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in STRATEGY_KINDS:
            raise ConfigError(f"unknown strategy {self.kind!r}; expected one of {STRATEGY_KINDS}")

    @property
    def pool(self) -> tuple[str, ...]:
        return _POOLS[self.kind]

    @property
    def predictor_id(self) -> str:
        return f"strategy:{self.kind}"


@dataclass(frozen=True)
class EnsembleWeights:
    """Nonnegative weights over a strategy's predictor pool, summing to one."""

    strategy: AggregationStrategy
    weights: dict[str, float]
    fitted_on: str = ""

    def __post_init__(self) -> None:
        if set(self.weights) != set(self.strategy.pool):
            raise ConfigError(
                f"weight keys {sorted(self.weights)} do not match the "
                f"{self.strategy.kind} pool {sorted(self.strategy.pool)}"
            )
        if any(w < 0 for w in self.weights.values()):
            raise ConfigError("ensemble weights must be nonnegative")
        total = sum(self.weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ConfigError(f"ensemble weights must sum to 1, got {total!r}")

    def to_obj(self) -> dict:
        return {
            "strategy": self.strategy.kind,
            "fitted_on": self.fitted_on,
            "weights": {k: self.weights[k] for k in self.strategy.pool},
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "EnsembleWeights":
        return cls(strategy=AggregationStrategy(obj["strategy"]),
                   weights=dict(obj["weights"]),
                   fitted_on=obj.get("fitted_on", ""))


def compute_performance_weights(strategy: AggregationStrategy,
                                validation_performance: Mapping[str, float],
                                fitted_on: str = "") -> EnsembleWeights:
    """Clip-and-normalize validation MCCs into pool weights."""
    pool = strategy.pool
    missing = [p for p in pool if p not in validation_performance]
    if missing:
        raise ConfigError(f"validation performance missing predictors: {missing}")

    if strategy.kind == UNWEIGHTED:
        weights = {p: 1.0 / len(pool) for p in pool}
    else:
        clipped = {p: max(float(validation_performance[p]), 0.0) for p in pool}
        total = sum(clipped.values())
        if total <= 0.0:
            weights = {p: 1.0 / len(pool) for p in pool}
        else:
            weights = {p: clipped[p] / total for p in pool}
    return EnsembleWeights(strategy=strategy, weights=weights, fitted_on=fitted_on)


def aggregate_predictions(weights: EnsembleWeights,
                          predictions: Mapping[str, float],
                          record_id: str = "") -> ProbabilisticPrediction:
    """Weighted mean of the pooled predictors' probabilities."""
    missing = [p for p in weights.strategy.pool if p not in predictions]
    if missing:
        raise ConfigError(f"predictions missing for weighted predictors: {missing}")
    probability = sum(weights.weights[p] * float(predictions[p])
                      for p in weights.strategy.pool)
    # guard against float drift just outside the convex hull
    probability = min(1.0, max(0.0, probability))
    return ProbabilisticPrediction(
        predictor_id=weights.strategy.predictor_id,
        record_id=record_id,
        probability=probability,
    )


def classify(prediction: ProbabilisticPrediction | float, threshold: float = 0.5) -> bool:
    """Threshold a probability into the Series A decision; ties are positive."""
    if not 0.0 < threshold < 1.0:
        raise ConfigError(f"threshold must lie in (0, 1), got {threshold!r}")
    probability = prediction.probability if isinstance(prediction, ProbabilisticPrediction) \
        else float(prediction)
    return probability >= threshold
