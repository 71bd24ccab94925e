"""Learner specs, trained models, and the shared train/predict entry points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import ConfigError, PredictionError, TrainingError
from ..taxonomy.encoding import EncoderStats, FeatureVector, feature_matrix

LEARNER_KINDS = ("logistic", "naive_bayes", "svm", "neural_net", "random_forest")

# the machine-intelligence pool; logistic regression is the baseline
MACHINE_PREDICTOR_IDS = tuple(f"machine:{kind}" for kind in LEARNER_KINDS)
BASELINE_KIND = "logistic"

DEFAULT_HYPERPARAMETERS: dict[str, dict[str, float | int | bool]] = {
    "logistic": {"l2": 1e-3, "iterations": 500, "step": 0.1},
    "naive_bayes": {"alpha": 1.0, "var_floor": 1e-9},
    "svm": {"c": 1.0, "steps": 2000},
    "neural_net": {"hidden": 16, "iterations": 2000, "step": 0.05, "init_scale": 0.5},
    "random_forest": {"trees": 100, "max_depth": 12, "min_leaf": 2, "bootstrap": True},
}


@dataclass(frozen=True)
class LearnerSpec:
    """One learner configuration; the seed fixes all stochastic choices."""

    kind: str
    hyperparameters: dict[str, float | int | bool] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in LEARNER_KINDS:
            raise ConfigError(f"unknown learner kind {self.kind!r}; expected one of {LEARNER_KINDS}")
        merged = dict(DEFAULT_HYPERPARAMETERS[self.kind])
        unknown = set(self.hyperparameters) - set(merged)
        if unknown:
            raise ConfigError(f"unknown hyperparameters for {self.kind}: {sorted(unknown)}")
        merged.update(self.hyperparameters)
        _check_hyperparameters(self.kind, merged)
        object.__setattr__(self, "hyperparameters", merged)

    @property
    def predictor_id(self) -> str:
        return f"machine:{self.kind}"


def _check_hyperparameters(kind: str, hp: dict) -> None:
    positive = {
        "logistic": ("iterations", "step"),
        "naive_bayes": ("var_floor",),
        "svm": ("c", "steps"),
        "neural_net": ("hidden", "iterations", "step", "init_scale"),
        "random_forest": ("trees", "max_depth", "min_leaf"),
    }
    for name in positive[kind]:
        if not hp[name] > 0:
            raise ConfigError(f"{kind} hyperparameter {name!r} must be positive, got {hp[name]!r}")
    if kind == "logistic" and hp["l2"] < 0:
        raise ConfigError(f"logistic l2 must be nonnegative, got {hp['l2']!r}")
    if kind == "naive_bayes" and hp["alpha"] < 0:
        raise ConfigError(f"naive_bayes alpha must be nonnegative, got {hp['alpha']!r}")


@dataclass(frozen=True)
class ProbabilisticPrediction:
    """One predictor's probability of Series A funding for one record."""

    predictor_id: str
    record_id: str
    probability: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.probability <= 1.0:
            raise PredictionError(
                f"probability {self.probability!r} outside [0, 1] "
                f"({self.predictor_id} on {self.record_id!r})"
            )


@dataclass(frozen=True)
class TrainedModel:
    """Immutable trained state; rejects inputs with unfamiliar feature names."""

    spec: LearnerSpec
    feature_names: tuple[str, ...]
    parameters: dict
    encoder_stats: EncoderStats | None = None


def _as_training_arrays(features: Sequence[FeatureVector],
                        labels: Sequence[bool]) -> tuple[np.ndarray, np.ndarray, tuple[str, ...]]:
    if not features:
        raise TrainingError("training set is empty")
    if len(labels) != len(features):
        raise TrainingError(
            f"dimension mismatch: {len(features)} feature vectors vs {len(labels)} labels"
        )
    x, names = feature_matrix(features)
    y = np.array([1 if b else 0 for b in labels], dtype=np.int64)
    if y.min() == y.max():
        raise TrainingError("training data contains a single class; both classes are required")
    return x, y, names


def train_model(spec: LearnerSpec, features: Sequence[FeatureVector],
                labels: Sequence[bool],
                encoder_stats: EncoderStats | None = None) -> TrainedModel:
    """Train one learner; deterministic given (spec, data)."""
    from . import forest, logistic, naive_bayes, neural_net, svm

    x, y, names = _as_training_arrays(features, labels)
    fit = {
        "logistic": logistic.fit,
        "naive_bayes": naive_bayes.fit,
        "svm": svm.fit,
        "neural_net": neural_net.fit,
        "random_forest": forest.fit,
    }[spec.kind]
    parameters = fit(x, y, spec.hyperparameters, spec.seed)
    return TrainedModel(spec=spec, feature_names=names, parameters=parameters,
                        encoder_stats=encoder_stats)


def _predict_matrix(model: TrainedModel, x: np.ndarray) -> np.ndarray:
    from . import forest, logistic, naive_bayes, neural_net, svm

    predict = {
        "logistic": logistic.predict,
        "naive_bayes": naive_bayes.predict,
        "svm": svm.predict,
        "neural_net": neural_net.predict,
        "random_forest": forest.predict,
    }[model.spec.kind]
    return predict(model.parameters, x)


def predict_proba(model: TrainedModel, feature: FeatureVector) -> ProbabilisticPrediction:
    """Probability of the positive class for one encoded record."""
    if feature.names != model.feature_names:
        raise PredictionError(
            f"feature names differ from training-time names for record {feature.record_id!r}"
        )
    prob = float(_predict_matrix(model, feature.values[None, :])[0])
    return ProbabilisticPrediction(
        predictor_id=model.spec.predictor_id,
        record_id=feature.record_id,
        probability=prob,
    )


def predict_proba_batch(model: TrainedModel,
                        features: Sequence[FeatureVector]) -> list[ProbabilisticPrediction]:
    """Vectorized predict_proba over many records."""
    if not features:
        return []
    x, names = feature_matrix(features)
    if names != model.feature_names:
        raise PredictionError("feature names differ from training-time names")
    probs = _predict_matrix(model, x)
    return [
        ProbabilisticPrediction(model.spec.predictor_id, fv.record_id, float(p))
        for fv, p in zip(features, probs)
    ]
