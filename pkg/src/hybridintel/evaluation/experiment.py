"""The full cross-validated experiment over machines, crowds, and fusions.

Per fold: encoder stats and all five learners are fitted on the nine
training folds; crowd aggregates are fold-independent but their ensemble
weights are re-fitted per fold from training-fold MCC, exactly like the
machines', so nothing from the held-out fold leaks into any fitted
artifact. The held-out fold is scored for all seven individual
predictors and all four aggregation strategies.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .. import ensemble
from ..crowd.judgments import (
    CROWD_PREDICTOR_IDS,
    Judgment,
    PanelConfig,
    aggregate_judgments,
    group_judgments,
    validate_panel_coverage,
)
from ..crowd.simulate import simulate_crowd
from ..errors import ConfigError, PanelError, TrainingError
from ..learners.base import (
    BASELINE_KIND,
    LEARNER_KINDS,
    LearnerSpec,
    predict_proba_batch,
    train_model,
)
from ..learners.persistence import _encode_value
from ..seeding import derive_seed
from ..taxonomy.dataset_io import label_counts
from ..taxonomy.encoding import encode_features, fit_encoder_stats
from ..taxonomy.records import StartupRecord
from ..taxonomy.schema import DEFAULT_SCHEMA, TaxonomySchema
from .anova import AnovaTable, anova_two_way
from .folds import FoldPlan, kfold_split
from .metrics import ConfusionMatrix, accuracy, auc, mcc
from .synthetic import SyntheticConfig, generate_synthetic_dataset

REPORT_FORMAT_VERSION = "report/1"


def default_learner_specs(seed: int) -> list[LearnerSpec]:
    """One spec per learner kind with per-kind derived seeds."""
    return [
        LearnerSpec(kind=kind, seed=derive_seed(seed, "learner", kind))
        for kind in LEARNER_KINDS
    ]


# reference-experiment overrides: a shallower forest and a shorter
# neural-net run keep training-fold MCC (which drives ensemble weights)
# close to honest out-of-fold skill on the ~900x66 regime
REFERENCE_LEARNER_HYPERPARAMETERS: dict[str, dict] = {
    "logistic": {},
    "naive_bayes": {},
    "svm": {},
    "neural_net": {"iterations": 800},
    "random_forest": {"max_depth": 6, "min_leaf": 8},
}


def reference_learner_specs(seed: int) -> list[LearnerSpec]:
    """Learner specs used by the reference experiment and the CLI default."""
    return learner_specs_from_hyperparameters(REFERENCE_LEARNER_HYPERPARAMETERS, seed)


def learner_specs_from_hyperparameters(overrides: Mapping[str, Mapping],
                                       seed: int) -> list[LearnerSpec]:
    unknown = set(overrides) - set(LEARNER_KINDS)
    if unknown:
        raise ConfigError(f"unknown learner kinds in config: {sorted(unknown)}")
    return [
        LearnerSpec(kind=kind, hyperparameters=dict(overrides.get(kind, {})),
                    seed=derive_seed(seed, "learner", kind))
        for kind in LEARNER_KINDS
    ]


@dataclass(frozen=True)
class MethodResult:
    method_id: str
    group: str  # "machine" | "crowd" | "strategy"
    is_baseline: bool
    fold_mcc: tuple[float, ...]
    fold_accuracy: tuple[float, ...]
    fold_auc: tuple[float, ...] | None = None

    @property
    def mean_mcc(self) -> float:
        return float(np.mean(self.fold_mcc))

    @property
    def sd_mcc(self) -> float:
        return float(np.std(self.fold_mcc, ddof=1))

    @property
    def mean_accuracy(self) -> float:
        return float(np.mean(self.fold_accuracy))

    @property
    def sd_accuracy(self) -> float:
        return float(np.std(self.fold_accuracy, ddof=1))

    def to_obj(self) -> dict:
        obj = {
            "method_id": self.method_id,
            "group": self.group,
            "is_baseline": self.is_baseline,
            "fold_mcc": list(self.fold_mcc),
            "fold_accuracy": list(self.fold_accuracy),
            "mean_mcc": self.mean_mcc,
            "sd_mcc": self.sd_mcc,
            "mean_accuracy": self.mean_accuracy,
            "sd_accuracy": self.sd_accuracy,
        }
        if self.fold_auc is not None:
            obj["fold_auc"] = list(self.fold_auc)
            obj["mean_auc"] = float(np.mean(self.fold_auc))
        return obj


@dataclass(frozen=True)
class EvaluationReport:
    seed: int
    k: int
    stratified: bool
    n_records: int
    labels: dict[str, int]
    methods: tuple[MethodResult, ...]
    anova: AnovaTable
    fold_plan: FoldPlan
    weights_per_fold: dict[str, list[dict[str, float]]]
    fold_fingerprints: list[dict]
    learner_specs: tuple[LearnerSpec, ...]
    synthetic_config: dict | None = None

    def method(self, method_id: str) -> MethodResult:
        for m in self.methods:
            if m.method_id == method_id:
                return m
        raise KeyError(method_id)

    def to_obj(self) -> dict:
        return {
            "format_version": REPORT_FORMAT_VERSION,
            "seed": self.seed,
            "k": self.k,
            "stratified": self.stratified,
            "n_records": self.n_records,
            "labels": dict(self.labels),
            "methods": [m.to_obj() for m in self.methods],
            "anova": self.anova.to_obj(),
            "fold_plan": self.fold_plan.to_obj(),
            "weights_per_fold": {k: list(v) for k, v in self.weights_per_fold.items()},
            "fold_fingerprints": list(self.fold_fingerprints),
            "learner_specs": [
                {"kind": s.kind, "hyperparameters": s.hyperparameters, "seed": s.seed}
                for s in self.learner_specs
            ],
            "synthetic_config": self.synthetic_config,
        }


def _digest(obj) -> str:
    return hashlib.sha256(
        json.dumps(_encode_value(obj), sort_keys=True).encode("utf-8")
    ).hexdigest()[:16]


def crowd_predictions(judgments: Sequence[Judgment],
                      records: Sequence[StartupRecord],
                      panel: PanelConfig) -> dict[str, dict[str, float]]:
    """Per-record aggregate probability for each crowd predictor.

    Requires full panel coverage for every record and both rater classes.
    """
    coverage = validate_panel_coverage(judgments, records, panel)
    if not coverage.ready:
        deficient = coverage.deficient()
        raise PanelError(
            f"{len(deficient)} record/class panels below minimum, e.g. "
            f"{deficient[0].record_id!r} ({deficient[0].rater_class}: "
            f"{deficient[0].count} < {deficient[0].required_min})"
        )
    groups = group_judgments(judgments)
    out: dict[str, dict[str, float]] = {pid: {} for pid in CROWD_PREDICTOR_IDS}
    for record in records:
        for rater_class in ("nonexpert", "expert"):
            prediction = aggregate_judgments(groups[(record.id, rater_class)], panel)
            out[prediction.predictor_id][record.id] = prediction.probability
    return out


def run_experiment(records: Sequence[StartupRecord],
                   judgments: Sequence[Judgment],
                   panel: PanelConfig | None = None,
                   learner_specs: Sequence[LearnerSpec] | None = None,
                   k: int = 10,
                   seed: int = 0,
                   stratified: bool = True,
                   fold_plan: FoldPlan | None = None,
                   include_auc: bool = False,
                   threshold: float = 0.5,
                   schema: TaxonomySchema = DEFAULT_SCHEMA,
                   synthetic_config_echo: dict | None = None) -> EvaluationReport:
    """Run the k-fold experiment; fully deterministic given ``seed``."""
    panel = panel or PanelConfig()
    unlabeled = [r.id for r in records if r.label_series_a is None]
    if unlabeled:
        raise ConfigError(f"experiment requires labeled records; unlabeled: {unlabeled[:5]}")
    if learner_specs is None:
        learner_specs = default_learner_specs(seed)
    if len({s.kind for s in learner_specs}) != len(learner_specs):
        raise ConfigError("learner specs must have distinct kinds")

    crowd_probs = crowd_predictions(judgments, records, panel)

    if fold_plan is None:
        fold_plan = kfold_split(records, k=k, stratified=stratified,
                                seed=derive_seed(seed, "folds"))
    k = fold_plan.k

    by_id = {r.id: r for r in records}
    labels_by_id = {r.id: bool(r.label_series_a) for r in records}

    machine_ids = [s.predictor_id for s in learner_specs]
    predictor_ids = machine_ids + list(CROWD_PREDICTOR_IDS)
    strategies = [ensemble.AggregationStrategy(kind) for kind in ensemble.STRATEGY_KINDS]

    fold_mcc: dict[str, list[float]] = {}
    fold_accuracy: dict[str, list[float]] = {}
    fold_auc: dict[str, list[float]] = {}
    weights_per_fold: dict[str, list[dict[str, float]]] = {
        s.kind: [] for s in strategies
    }
    fingerprints: list[dict] = []

    for fold in range(k):
        train_ids = sorted(fold_plan.train_ids(fold))
        test_ids = sorted(fold_plan.test_ids(fold))
        train_records = [by_id[rid] for rid in train_ids]
        test_records = [by_id[rid] for rid in test_ids]
        train_labels = [labels_by_id[rid] for rid in train_ids]
        test_labels = [labels_by_id[rid] for rid in test_ids]
        if len(set(train_labels)) < 2:
            raise TrainingError(f"fold {fold}: training folds contain a single class")

        stats = fit_encoder_stats(train_records, schema)
        train_features = encode_features(train_records, stats, schema)
        test_features = encode_features(test_records, stats, schema)

        # probabilities per predictor, on training records and test records
        train_probs: dict[str, dict[str, float]] = {}
        test_probs: dict[str, dict[str, float]] = {}
        model_digests: dict[str, str] = {}
        for spec in learner_specs:
            fold_spec = LearnerSpec(
                kind=spec.kind,
                hyperparameters=spec.hyperparameters,
                seed=derive_seed(spec.seed, "fold", fold),
            )
            model = train_model(fold_spec, train_features, train_labels, encoder_stats=stats)
            model_digests[spec.kind] = _digest(model.parameters)
            train_probs[spec.predictor_id] = {
                p.record_id: p.probability
                for p in predict_proba_batch(model, train_features)
            }
            test_probs[spec.predictor_id] = {
                p.record_id: p.probability
                for p in predict_proba_batch(model, test_features)
            }
        for pid in CROWD_PREDICTOR_IDS:
            train_probs[pid] = {rid: crowd_probs[pid][rid] for rid in train_ids}
            test_probs[pid] = {rid: crowd_probs[pid][rid] for rid in test_ids}

        # training-fold performance drives this fold's ensemble weights
        train_mcc = {
            pid: _score_mcc(train_probs[pid], train_ids, labels_by_id, threshold)
            for pid in predictor_ids
        }
        fold_weights = {}
        for strategy in strategies:
            weights = ensemble.compute_performance_weights(
                strategy, train_mcc, fitted_on=f"fold-{fold}"
            )
            fold_weights[strategy.kind] = weights
            weights_per_fold[strategy.kind].append(dict(weights.weights))

        fingerprints.append({
            "fold": fold,
            "encoder_stats": _digest(stats.to_obj()),
            "models": model_digests,
            "train_mcc": {pid: train_mcc[pid] for pid in predictor_ids},
        })

        # held-out scoring: individual predictors
        for pid in predictor_ids:
            probs = [test_probs[pid][rid] for rid in test_ids]
            _append_scores(fold_mcc, fold_accuracy, fold_auc, pid, probs,
                           test_labels, threshold, include_auc)

        # held-out scoring: aggregation strategies
        for strategy in strategies:
            weights = fold_weights[strategy.kind]
            probs = [
                ensemble.aggregate_predictions(
                    weights, {pid: test_probs[pid][rid] for pid in strategy.pool}, rid
                ).probability
                for rid in test_ids
            ]
            _append_scores(fold_mcc, fold_accuracy, fold_auc, strategy.predictor_id,
                           probs, test_labels, threshold, include_auc)

    methods = []
    for pid in predictor_ids:
        group = "machine" if pid in machine_ids else "crowd"
        methods.append(MethodResult(
            method_id=pid,
            group=group,
            is_baseline=(pid == f"machine:{BASELINE_KIND}"),
            fold_mcc=tuple(fold_mcc[pid]),
            fold_accuracy=tuple(fold_accuracy[pid]),
            fold_auc=tuple(fold_auc[pid]) if include_auc else None,
        ))
    for strategy in strategies:
        pid = strategy.predictor_id
        methods.append(MethodResult(
            method_id=pid,
            group="strategy",
            is_baseline=False,
            fold_mcc=tuple(fold_mcc[pid]),
            fold_accuracy=tuple(fold_accuracy[pid]),
            fold_auc=tuple(fold_auc[pid]) if include_auc else None,
        ))

    scores = np.array([m.fold_mcc for m in methods], dtype=np.float64)
    table = anova_two_way(scores)

    return EvaluationReport(
        seed=seed,
        k=k,
        stratified=fold_plan.stratified,
        n_records=len(records),
        labels=label_counts(records),
        methods=tuple(methods),
        anova=table,
        fold_plan=fold_plan,
        weights_per_fold=weights_per_fold,
        fold_fingerprints=fingerprints,
        learner_specs=tuple(learner_specs),
        synthetic_config=synthetic_config_echo,
    )


def run_synthetic_experiment(config: SyntheticConfig,
                             learner_specs: Sequence[LearnerSpec] | None = None,
                             k: int | None = None,
                             seed: int | None = None,
                             stratified: bool = True,
                             include_auc: bool = False,
                             schema: TaxonomySchema = DEFAULT_SCHEMA) -> EvaluationReport:
    """Generate data, simulate panels, and run the experiment end to end."""
    seed = config.seed if seed is None else seed
    records, latent = generate_synthetic_dataset(config, schema)
    raters = config.rater_pool.build()
    judgments = simulate_crowd(records, latent, raters, config.panel,
                               seed=derive_seed(seed, "crowd-sim"))
    return run_experiment(
        records,
        judgments,
        panel=config.panel,
        learner_specs=learner_specs,
        k=config.k if k is None else k,
        seed=seed,
        stratified=stratified,
        include_auc=include_auc,
        schema=schema,
        synthetic_config_echo=config.to_obj(),
    )


def _score_mcc(probs: Mapping[str, float], ids: Sequence[str],
               labels_by_id: Mapping[str, bool], threshold: float) -> float:
    predicted = [ensemble.classify(probs[rid], threshold) for rid in ids]
    actual = [labels_by_id[rid] for rid in ids]
    return mcc(ConfusionMatrix.from_predictions(actual, predicted))


def _append_scores(fold_mcc: dict, fold_accuracy: dict, fold_auc: dict,
                   method_id: str, probs: Sequence[float], labels: Sequence[bool],
                   threshold: float, include_auc: bool) -> None:
    predicted = [ensemble.classify(p, threshold) for p in probs]
    cm = ConfusionMatrix.from_predictions(labels, predicted)
    fold_mcc.setdefault(method_id, []).append(mcc(cm))
    fold_accuracy.setdefault(method_id, []).append(accuracy(cm))
    if include_auc:
        fold_auc.setdefault(method_id, []).append(auc(labels, probs))
