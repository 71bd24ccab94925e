"""Fusion strategies: weight fitting, aggregation, thresholding."""

import numpy as np
import pytest

from hybridintel.ensemble import (
    ALL_PREDICTOR_IDS,
    AggregationStrategy,
    EnsembleWeights,
    classify,
    compute_performance_weights,
    aggregate_predictions,
    CROWD_WEIGHTED,
    HYBRID_WEIGHTED,
    MACHINE_WEIGHTED,
    UNWEIGHTED,
)
from hybridintel.errors import ConfigError

MACHINES = [p for p in ALL_PREDICTOR_IDS if p.startswith("machine:")]
CROWDS = [p for p in ALL_PREDICTOR_IDS if p.startswith("crowd:")]


def mccs(values: dict[str, float] | float) -> dict[str, float]:
    if isinstance(values, dict):
        return values
    return {p: values for p in ALL_PREDICTOR_IDS}


class TestPools:
    def test_pool_membership(self):
        assert AggregationStrategy(MACHINE_WEIGHTED).pool == tuple(MACHINES)
        assert AggregationStrategy(CROWD_WEIGHTED).pool == tuple(CROWDS)
        assert AggregationStrategy(HYBRID_WEIGHTED).pool == tuple(ALL_PREDICTOR_IDS)
        assert AggregationStrategy(UNWEIGHTED).pool == tuple(ALL_PREDICTOR_IDS)
        assert len(ALL_PREDICTOR_IDS) == 7

    def test_unknown_strategy(self):
        with pytest.raises(ConfigError, match="unknown strategy"):
            AggregationStrategy("stacked")


class TestPerformanceWeights:
    def test_symmetric_mccs_give_equal_weights(self):
        strategy = AggregationStrategy(CROWD_WEIGHTED)
        weights = compute_performance_weights(strategy, {CROWDS[0]: 0.5, CROWDS[1]: 0.5})
        assert weights.weights == {CROWDS[0]: 0.5, CROWDS[1]: 0.5}

    def test_clip_and_normalize(self):
        """{0.6, 0.2, -0.1} clips to {0.6, 0.2, 0} then normalizes."""
        strategy = AggregationStrategy(MACHINE_WEIGHTED)
        scores = {MACHINES[0]: 0.6, MACHINES[1]: 0.2, MACHINES[2]: -0.1,
                  MACHINES[3]: 0.0, MACHINES[4]: 0.0}
        weights = compute_performance_weights(strategy, scores)
        assert abs(weights.weights[MACHINES[0]] - 0.75) < 1e-12
        assert abs(weights.weights[MACHINES[1]] - 0.25) < 1e-12
        assert weights.weights[MACHINES[2]] == 0.0

    def test_all_nonpositive_falls_back_to_equal(self):
        strategy = AggregationStrategy(HYBRID_WEIGHTED)
        weights = compute_performance_weights(strategy, mccs(-0.2))
        assert all(abs(w - 1 / 7) < 1e-12 for w in weights.weights.values())

    def test_unweighted_ignores_performance(self):
        strategy = AggregationStrategy(UNWEIGHTED)
        weights = compute_performance_weights(strategy, mccs({
            **{p: 0.9 for p in MACHINES}, **{p: -0.5 for p in CROWDS},
        }))
        assert all(abs(w - 1 / 7) < 1e-12 for w in weights.weights.values())

    def test_missing_predictor_named(self):
        strategy = AggregationStrategy(MACHINE_WEIGHTED)
        incomplete = {p: 0.3 for p in MACHINES[:-1]}
        with pytest.raises(ConfigError, match=MACHINES[-1]):
            compute_performance_weights(strategy, incomplete)

    def test_invariants_on_random_cases(self):
        """Nonnegative, sum-to-one, keys equal the pool; 100 random draws."""
        rng = np.random.default_rng(44)
        for _ in range(100):
            kind = str(rng.choice([MACHINE_WEIGHTED, CROWD_WEIGHTED,
                                   HYBRID_WEIGHTED, UNWEIGHTED]))
            strategy = AggregationStrategy(kind)
            scores = {p: float(rng.uniform(-1, 1)) for p in ALL_PREDICTOR_IDS}
            weights = compute_performance_weights(strategy, scores)
            assert set(weights.weights) == set(strategy.pool)
            assert all(w >= 0 for w in weights.weights.values())
            assert abs(sum(weights.weights.values()) - 1.0) < 1e-9


class TestAggregatePredictions:
    def weights_for(self, kind, mapping):
        return EnsembleWeights(strategy=AggregationStrategy(kind), weights=mapping)

    def test_equal_weights_midpoint(self):
        weights = self.weights_for(CROWD_WEIGHTED, {CROWDS[0]: 0.5, CROWDS[1]: 0.5})
        out = aggregate_predictions(weights, {CROWDS[0]: 0.2, CROWDS[1]: 0.8})
        assert abs(out.probability - 0.5) < 1e-15

    def test_identity_weight_passes_through(self):
        weights = self.weights_for(CROWD_WEIGHTED, {CROWDS[0]: 1.0, CROWDS[1]: 0.0})
        out = aggregate_predictions(weights, {CROWDS[0]: 0.731, CROWDS[1]: 0.9})
        assert out.probability == 0.731

    def test_weighted_mean_arithmetic(self):
        """0.75*0.8 + 0.25*0.4 + 0*0.9 = 0.7."""
        weights = self.weights_for(MACHINE_WEIGHTED, {
            MACHINES[0]: 0.75, MACHINES[1]: 0.25, MACHINES[2]: 0.0,
            MACHINES[3]: 0.0, MACHINES[4]: 0.0,
        })
        predictions = {MACHINES[0]: 0.8, MACHINES[1]: 0.4, MACHINES[2]: 0.9,
                       MACHINES[3]: 0.1, MACHINES[4]: 0.99}
        out = aggregate_predictions(weights, predictions)
        assert abs(out.probability - 0.7) < 1e-12

    def test_missing_prediction_rejected(self):
        weights = self.weights_for(CROWD_WEIGHTED, {CROWDS[0]: 0.5, CROWDS[1]: 0.5})
        with pytest.raises(ConfigError, match="missing"):
            aggregate_predictions(weights, {CROWDS[0]: 0.4})

    def test_convexity_bound_random_cases(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            raw = rng.uniform(0, 1, size=7)
            weights = compute_performance_weights(
                AggregationStrategy(HYBRID_WEIGHTED),
                {p: float(rng.uniform(-1, 1)) for p in ALL_PREDICTOR_IDS},
            )
            predictions = dict(zip(ALL_PREDICTOR_IDS, map(float, raw)))
            out = aggregate_predictions(weights, predictions)
            assert raw.min() - 1e-12 <= out.probability <= raw.max() + 1e-12

    def test_equal_mcc_equivalence_and_dominance(self):
        rng = np.random.default_rng(15)
        for _ in range(100):
            predictions = {p: float(rng.uniform(0, 1)) for p in ALL_PREDICTOR_IDS}
            # equal positive MCCs: hybrid weighting collapses to the baseline
            level = float(rng.uniform(0.05, 0.9))
            hybrid = compute_performance_weights(
                AggregationStrategy(HYBRID_WEIGHTED), mccs(level))
            baseline = compute_performance_weights(
                AggregationStrategy(UNWEIGHTED), mccs(level))
            a = aggregate_predictions(hybrid, predictions).probability
            b = aggregate_predictions(baseline, predictions).probability
            assert abs(a - b) < 1e-12
            # dominance: one positive performer takes the whole pool
            winner = str(rng.choice(ALL_PREDICTOR_IDS))
            scores = {p: float(rng.uniform(-1, 0)) for p in ALL_PREDICTOR_IDS}
            scores[winner] = float(rng.uniform(0.05, 1))
            dominant = compute_performance_weights(
                AggregationStrategy(HYBRID_WEIGHTED), scores)
            out = aggregate_predictions(dominant, predictions)
            assert out.probability == predictions[winner]


class TestWeightsPersistence:
    def test_json_roundtrip(self):
        weights = compute_performance_weights(
            AggregationStrategy(HYBRID_WEIGHTED),
            {p: 0.1 * (i + 1) for i, p in enumerate(ALL_PREDICTOR_IDS)},
            fitted_on="fold-3",
        )
        restored = EnsembleWeights.from_obj(weights.to_obj())
        assert restored.strategy == weights.strategy
        assert restored.fitted_on == "fold-3"
        assert restored.weights == weights.weights

    def test_invalid_weights_rejected(self):
        strategy = AggregationStrategy(CROWD_WEIGHTED)
        with pytest.raises(ConfigError, match="sum to 1"):
            EnsembleWeights(strategy=strategy,
                            weights={CROWDS[0]: 0.7, CROWDS[1]: 0.7})
        with pytest.raises(ConfigError, match="nonnegative"):
            EnsembleWeights(strategy=strategy,
                            weights={CROWDS[0]: -0.2, CROWDS[1]: 1.2})
        with pytest.raises(ConfigError, match="pool"):
            EnsembleWeights(strategy=strategy, weights={CROWDS[0]: 1.0})


class TestClassify:
    def test_basic_threshold(self):
        assert classify(0.7) is True
        assert classify(0.3) is False

    def test_tie_is_positive(self):
        assert classify(0.5) is True

    def test_threshold_bounds(self):
        with pytest.raises(ConfigError, match="threshold"):
            classify(0.5, threshold=0.0)
        with pytest.raises(ConfigError, match="threshold"):
            classify(0.5, threshold=1.0)

    def test_decision_stability_under_weight_perturbation(self):
        """Perturbing weights without crossing the threshold keeps the label."""
        rng = np.random.default_rng(6)
        strategy = AggregationStrategy(HYBRID_WEIGHTED)
        for _ in range(50):
            predictions = {p: float(rng.uniform(0, 1)) for p in ALL_PREDICTOR_IDS}
            w1 = compute_performance_weights(strategy, mccs(
                {p: float(rng.uniform(0, 1)) for p in ALL_PREDICTOR_IDS}))
            w2 = compute_performance_weights(strategy, mccs(
                {p: float(rng.uniform(0, 1)) for p in ALL_PREDICTOR_IDS}))
            p1 = aggregate_predictions(w1, predictions).probability
            p2 = aggregate_predictions(w2, predictions).probability
            if (p1 >= 0.5) == (p2 >= 0.5):
                assert classify(p1) == classify(p2)
