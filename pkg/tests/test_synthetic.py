"""Synthetic dataset generator: validity, determinism, planted structure."""

import numpy as np
import pytest

from hybridintel.errors import ConfigError
from hybridintel.evaluation.synthetic import (
    SyntheticConfig,
    generate_synthetic_dataset,
    reference_config,
)
from hybridintel.taxonomy import DEFAULT_SCHEMA, dataset_to_csv_text, validate_dataset


class TestGeneration:
    def test_planned_scale_1500(self):
        records, latent = generate_synthetic_dataset(
            SyntheticConfig(n_records=1500, seed=1))
        assert len(records) == 1500
        validate_dataset(records, DEFAULT_SCHEMA)
        assert set(latent) == {r.id for r in records}
        assert all(0.0 <= q <= 1.0 for q in latent.values())

    def test_byte_identical_reruns(self):
        config = reference_config(n_records=150, seed=9)
        a_records, a_latent = generate_synthetic_dataset(config)
        b_records, b_latent = generate_synthetic_dataset(config)
        assert dataset_to_csv_text(a_records) == dataset_to_csv_text(b_records)
        assert a_latent == b_latent

    def test_different_seeds_differ(self):
        a, _ = generate_synthetic_dataset(SyntheticConfig(n_records=120, seed=1))
        b, _ = generate_synthetic_dataset(SyntheticConfig(n_records=120, seed=2))
        assert dataset_to_csv_text(a) != dataset_to_csv_text(b)

    def test_zero_coefficients_hit_base_rate(self):
        """99% binomial interval around 0.7 with all channels silenced."""
        config = SyntheticConfig(
            n_records=2000, seed=5, base_rate=0.7,
            hard_coefficients={}, soft_strength=0.0, latent_noise_sd=0.0,
        )
        records, latent = generate_synthetic_dataset(config)
        assert all(abs(q - 0.7) < 1e-12 for q in latent.values())
        positives = sum(bool(r.label_series_a) for r in records)
        half_width = 2.576 * np.sqrt(0.7 * 0.3 / 2000)
        assert abs(positives / 2000 - 0.7) < half_width

    def test_soft_texts_track_soft_factor(self):
        """Strong soft channel: high-q records draw top-tier templates."""
        config = SyntheticConfig(
            n_records=600, seed=3, base_rate=0.5,
            hard_coefficients={}, soft_strength=2.5, latent_noise_sd=0.0,
        )
        records, latent = generate_synthetic_dataset(config)
        from hybridintel.evaluation.synthetic import _INNOVATIVENESS_TIERS
        tier_of = {}
        for tier, bank in enumerate(_INNOVATIVENESS_TIERS):
            for text in bank:
                tier_of[text] = tier
        qualities = np.array([latent[r.id] for r in records])
        tiers = np.array([tier_of[r.product_innovativeness_text] for r in records])
        top, bottom = qualities > 0.75, qualities < 0.25
        assert tiers[top].mean() > tiers[bottom].mean() + 1.0

    def test_missing_proximity_rate(self):
        config = SyntheticConfig(n_records=1000, seed=2, proximity_missing_rate=0.15)
        records, _ = generate_synthetic_dataset(config)
        missing = sum(r.competitor_proximity_mean is None for r in records)
        assert 100 < missing < 210

    def test_config_validation(self):
        with pytest.raises(ConfigError, match="n_records"):
            SyntheticConfig(n_records=50, k=10)
        with pytest.raises(ConfigError, match="base_rate"):
            SyntheticConfig(n_records=200, base_rate=1.5)
        with pytest.raises(ConfigError, match="unknown planted feature"):
            SyntheticConfig(n_records=200, hard_coefficients={"valuation": 1.0})

    def test_config_roundtrip(self):
        config = reference_config(n_records=300, seed=4)
        restored = SyntheticConfig.from_obj(config.to_obj())
        assert restored == config
