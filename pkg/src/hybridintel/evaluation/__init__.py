"""Synthetic data, folds, metrics, ANOVA, and the cross-validated experiment."""

from .anova import AnovaTable, anova_two_way, f_survival, regularized_incomplete_beta
from .experiment import (
    REFERENCE_LEARNER_HYPERPARAMETERS,
    EvaluationReport,
    MethodResult,
    crowd_predictions,
    default_learner_specs,
    learner_specs_from_hyperparameters,
    reference_learner_specs,
    run_experiment,
    run_synthetic_experiment,
)
from .folds import FoldPlan, kfold_split
from .metrics import ConfusionMatrix, accuracy, auc, mcc
from .report import load_report_obj, render_text, report_to_json_text, save_report
from .synthetic import (
    PLANTABLE_FEATURES,
    SyntheticConfig,
    generate_synthetic_dataset,
    reference_config,
)

__all__ = [
    "AnovaTable",
    "ConfusionMatrix",
    "EvaluationReport",
    "FoldPlan",
    "MethodResult",
    "PLANTABLE_FEATURES",
    "REFERENCE_LEARNER_HYPERPARAMETERS",
    "SyntheticConfig",
    "accuracy",
    "anova_two_way",
    "auc",
    "crowd_predictions",
    "default_learner_specs",
    "f_survival",
    "generate_synthetic_dataset",
    "kfold_split",
    "learner_specs_from_hyperparameters",
    "load_report_obj",
    "mcc",
    "reference_config",
    "reference_learner_specs",
    "regularized_incomplete_beta",
    "render_text",
    "report_to_json_text",
    "run_experiment",
    "run_synthetic_experiment",
    "save_report",
]
