"""Judgment aggregation, panel validation, and the rater simulator."""

import io

import numpy as np
import pytest

from hybridintel.crowd import (
    Judgment,
    PanelConfig,
    RaterModel,
    RaterPoolConfig,
    aggregate_judgments,
    judgments_to_csv_text,
    rate_once,
    read_judgments,
    simulate_crowd,
    validate_panel_coverage,
)
from hybridintel.errors import ConfigError, PanelError, ValidationError

from conftest import make_records


def judgment(rater: str, record: str = "su-00001", rating: int | tuple = 4,
             rater_class: str = "nonexpert") -> Judgment:
    if not isinstance(rating, tuple):
        rating = (rating, rating, rating)
    return Judgment(
        rater_id=rater,
        rater_class=rater_class,
        record_id=record,
        ratings={"feasibility": int(rating[0]), "scalability": int(rating[1]),
                 "desirability": int(rating[2])},
    )


def panel(ratings, record="su-00001", rater_class="nonexpert") -> list[Judgment]:
    return [judgment(f"r{i:03d}", record, r, rater_class) for i, r in enumerate(ratings)]


WIDE_OPEN = PanelConfig(nonexpert_min=1, nonexpert_max=1000, expert_min=1, expert_max=1000)


class TestJudgmentValidation:
    def test_rating_bounds(self):
        with pytest.raises(ValidationError, match="1..7"):
            judgment("r1", rating=(8, 4, 4))
        with pytest.raises(ValidationError, match="1..7"):
            judgment("r1", rating=(4, 0, 4))

    def test_missing_dimension(self):
        with pytest.raises(ValidationError, match="dimensions"):
            Judgment(rater_id="r", rater_class="expert", record_id="x",
                     ratings={"feasibility": 4, "scalability": 4})

    def test_unknown_rater_class(self):
        with pytest.raises(ValidationError, match="rater_class"):
            judgment("r1", rater_class="enthusiast")


class TestAggregation:
    def test_scale_maximum_gives_one(self):
        result = aggregate_judgments(panel([7] * 5), WIDE_OPEN)
        assert result.probability == 1.0

    def test_scale_minimum_gives_zero(self):
        result = aggregate_judgments(panel([1] * 5), WIDE_OPEN)
        assert result.probability == 0.0

    def test_two_rater_arithmetic(self):
        """(4+6)/2 = 5 on the 1..7 scale maps to 4/6."""
        result = aggregate_judgments(panel([4, 6]), WIDE_OPEN)
        assert abs(result.probability - 2.0 / 3.0) < 1e-12

    def test_predictor_ids(self):
        assert aggregate_judgments(panel([4] * 3), WIDE_OPEN).predictor_id == "crowd:nonexpert"
        expert = panel([4] * 3, rater_class="expert")
        assert aggregate_judgments(expert, WIDE_OPEN).predictor_id == "crowd:expert"

    def test_fifteen_nonexperts_insufficient(self):
        """Default panel floor is 16 non-experts per startup."""
        with pytest.raises(PanelError, match="insufficient panel"):
            aggregate_judgments(panel([4] * 15), PanelConfig())
        result = aggregate_judgments(panel([4] * 16), PanelConfig())
        assert result.probability == 0.5

    def test_oversized_panel_rejected(self):
        with pytest.raises(PanelError, match="oversized"):
            aggregate_judgments(panel([4] * 21), PanelConfig())

    def test_mixed_records_rejected(self):
        mixed = panel([4, 4]) + panel([4], record="su-00002")
        with pytest.raises(PanelError, match="mixes records"):
            aggregate_judgments(mixed, WIDE_OPEN)

    def test_mixed_classes_rejected(self):
        mixed = panel([4, 4]) + [judgment("x1", rater_class="expert")]
        with pytest.raises(PanelError, match="mixes rater classes"):
            aggregate_judgments(mixed, WIDE_OPEN)

    def test_duplicate_rater_rejected(self):
        with pytest.raises(PanelError, match="duplicate"):
            aggregate_judgments([judgment("same"), judgment("same")], WIDE_OPEN)


class TestAggregationProperties:
    def test_permutation_invariance(self):
        rng = np.random.default_rng(8)
        ratings = [tuple(rng.integers(1, 8, size=3)) for _ in range(18)]
        base = aggregate_judgments(panel(ratings), WIDE_OPEN).probability
        for _ in range(10):
            perm = list(rng.permutation(len(ratings)))
            shuffled = panel([ratings[i] for i in perm])
            assert aggregate_judgments(shuffled, WIDE_OPEN).probability == base

    def test_adding_mean_judgment_is_neutral(self):
        ratings = [2, 3, 5, 6]  # mean 4
        before = aggregate_judgments(panel(ratings), WIDE_OPEN).probability
        after = aggregate_judgments(panel(ratings + [4]), WIDE_OPEN).probability
        assert abs(before - after) < 1e-12

    def test_monotone_in_single_rating(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            ratings = [tuple(rng.integers(1, 8, size=3)) for _ in range(6)]
            base = aggregate_judgments(panel(ratings), WIDE_OPEN).probability
            i = int(rng.integers(0, len(ratings)))
            dim = int(rng.integers(0, 3))
            if ratings[i][dim] == 7:
                continue
            raised = [list(r) for r in ratings]
            raised[i][dim] += 1
            bumped = aggregate_judgments(panel([tuple(r) for r in raised]), WIDE_OPEN)
            assert bumped.probability > base

    def test_probability_bounds_random_panels(self):
        rng = np.random.default_rng(14)
        for _ in range(50):
            ratings = [tuple(rng.integers(1, 8, size=3))
                       for _ in range(int(rng.integers(1, 25)))]
            p = aggregate_judgments(panel(ratings), WIDE_OPEN).probability
            assert 0.0 <= p <= 1.0


class TestCoverage:
    def test_all_covered_ready(self):
        records = make_records(3)
        config = PanelConfig(nonexpert_min=2, nonexpert_max=30, expert_min=1, expert_max=30)
        judgments = []
        for r in records:
            judgments += panel([4, 5], record=r.id)
            judgments += panel([6], record=r.id, rater_class="expert")
        report = validate_panel_coverage(judgments, records, config)
        assert report.ready
        assert not report.deficient()

    def test_expert_shortfall_listed(self):
        """4 expert judgments against a floor of 5 blocks readiness."""
        records = make_records(1)
        config = PanelConfig(nonexpert_min=1, nonexpert_max=30, expert_min=5, expert_max=7)
        judgments = panel([4], record=records[0].id)
        judgments += panel([4, 4, 4, 4], record=records[0].id, rater_class="expert")
        report = validate_panel_coverage(judgments, records, config)
        assert not report.ready
        gap = [e for e in report.deficient() if e.rater_class == "expert"]
        assert len(gap) == 1
        assert gap[0].count == 4
        assert gap[0].required_min == 5

    def test_empty_judgments_all_deficient(self):
        records = make_records(4)
        report = validate_panel_coverage([], records, PanelConfig())
        assert not report.ready
        assert len(report.deficient()) == 8  # 4 records x 2 classes


class TestSimulator:
    def make_raters(self, n_ne=20, n_ex=8, ne_sd=0.2, ex_sd=0.1):
        pool = RaterPoolConfig(n_nonexpert=n_ne, n_expert=n_ex,
                               nonexpert_noise_sd=ne_sd, expert_noise_sd=ex_sd,
                               nonexpert_bias_sd=0.05, expert_bias_sd=0.02, seed=3)
        return pool.build()

    def test_degenerate_noise_perfect_quality_rates_seven(self):
        rater = RaterModel("r0", "nonexpert", bias=0.0, noise_sd=0.0, seed=1)
        assert rate_once(1.0, rater, "rec") == {
            "feasibility": 7, "scalability": 7, "desirability": 7,
        }

    def test_deterministic_given_seeds(self):
        records = make_records(5)
        latent = {r.id: 0.5 for r in records}
        raters = self.make_raters()
        a = simulate_crowd(records, latent, raters, PanelConfig(), seed=9)
        b = simulate_crowd(records, latent, raters, PanelConfig(), seed=9)
        assert a == b
        c = simulate_crowd(records, latent, raters, PanelConfig(), seed=10)
        assert a != c

    def test_panel_sizes_within_bounds(self):
        records = make_records(12)
        latent = {r.id: 0.5 for r in records}
        judgments = simulate_crowd(records, latent, self.make_raters(30, 10),
                                   PanelConfig(), seed=2)
        for r in records:
            ne = sum(1 for j in judgments if j.record_id == r.id and j.rater_class == "nonexpert")
            ex = sum(1 for j in judgments if j.record_id == r.id and j.rater_class == "expert")
            assert 16 <= ne <= 20
            assert 5 <= ex <= 7

    def test_too_few_raters_rejected(self):
        records = make_records(2)
        latent = {r.id: 0.5 for r in records}
        with pytest.raises(ConfigError, match="eligible"):
            simulate_crowd(records, latent, self.make_raters(4, 8), PanelConfig(), seed=0)

    def test_noise_ceiling_excludes_raters(self):
        records = make_records(2)
        latent = {r.id: 0.5 for r in records}
        config = PanelConfig(max_rater_noise_sd=0.15)
        # non-experts (sd 0.2) all excluded by the quality gate
        with pytest.raises(ConfigError, match="eligible"):
            simulate_crowd(records, latent, self.make_raters(30, 10), config, seed=0)

    def test_experts_track_quality_better(self):
        """Paired panels: lower-noise experts land closer to latent quality."""
        rng = np.random.default_rng(7)
        records = make_records(40)
        latent = {r.id: float(q) for r, q in zip(records, rng.uniform(0.25, 0.75, 40))}
        config = PanelConfig(nonexpert_min=6, nonexpert_max=6, expert_min=6, expert_max=6)
        raters = self.make_raters(n_ne=6, n_ex=6, ne_sd=0.35, ex_sd=0.08)
        judgments = simulate_crowd(records, latent, raters, config, seed=4)

        errors = {"nonexpert": [], "expert": []}
        for r in records:
            for cls in ("nonexpert", "expert"):
                group = [j for j in judgments if j.record_id == r.id and j.rater_class == cls]
                p = aggregate_judgments(group, config).probability
                errors[cls].append(abs(p - latent[r.id]))
        assert np.mean(errors["expert"]) <= np.mean(errors["nonexpert"])


class TestJudgmentIo:
    def test_csv_roundtrip(self):
        judgments = panel([1, 4, 7]) + panel([3], rater_class="expert")
        text = judgments_to_csv_text(judgments)
        restored = read_judgments(io.StringIO(text))
        assert restored == judgments

    def test_header_enforced(self):
        with pytest.raises(ValidationError, match="header"):
            read_judgments(io.StringIO("who,what\n"))
