"""The five machine-intelligence learners and their shared interfaces."""

from .base import (
    BASELINE_KIND,
    DEFAULT_HYPERPARAMETERS,
    LEARNER_KINDS,
    MACHINE_PREDICTOR_IDS,
    LearnerSpec,
    ProbabilisticPrediction,
    TrainedModel,
    predict_proba,
    predict_proba_batch,
    train_model,
)
from .persistence import MODEL_FORMAT_VERSION, load_model, save_model

__all__ = [
    "BASELINE_KIND",
    "DEFAULT_HYPERPARAMETERS",
    "LEARNER_KINDS",
    "MACHINE_PREDICTOR_IDS",
    "MODEL_FORMAT_VERSION",
    "LearnerSpec",
    "ProbabilisticPrediction",
    "TrainedModel",
    "load_model",
    "predict_proba",
    "predict_proba_batch",
    "save_model",
    "train_model",
]
