"""Shared fixtures, builders, and the acceptance-criterion reporter."""

from __future__ import annotations

import numpy as np
import pytest

from hybridintel.taxonomy.records import StartupRecord

_acceptance_results: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _acceptance_results.append((item.nodeid, report.outcome.upper(), doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for _, outcome, doc in _acceptance_results:
        status = "PASS" if outcome == "PASSED" else outcome
        terminalreporter.write_line(f"[{status}] {doc}")


def make_record(record_id: str = "su-00001", **overrides) -> StartupRecord:
    """A fully populated valid record; any field can be overridden."""
    fields = dict(
        id=record_id,
        b2b_b2c="B2B",
        industry="fintech",
        firm_age_years=2.5,
        business_model_dna="Freemium Platforms",
        tech_hype_phase="PeakOfExpectations",
        proof_of_concept=True,
        competitor_count=7,
        competitor_proximity_mean=0.42,
        revenue_model="subscription",
        capital_raised_usd=250_000.0,
        team_size=6,
        team_field_backgrounds=3,
        entrepreneurial_experience=True,
        education_level="Master",
        knowledge_support=frozenset({"incubator", "university"}),
        financial_support=frozenset({"equity backed"}),
        pilot_customers=12,
        web_visits=3400.0,
        web_avg_duration_s=95.0,
        web_backlinks=210.0,
        web_bounce_rate=0.55,
        twitter_followers=820,
        tweet_count=140,
        tweet_sentiment=0.25,
        product_innovativeness_text="A clearly differentiated product.",
        scalability_text="Self-serve rollout with near-zero marginal cost.",
        vision_text="Platform for the whole vertical.",
        label_series_a=True,
    )
    fields.update(overrides)
    return StartupRecord(**fields)


def make_records(n: int, seed: int = 0, positive_rate: float = 0.5) -> list[StartupRecord]:
    """n distinct valid records with deterministic pseudo-random labels."""
    rng = np.random.default_rng(seed)
    records = []
    for i in range(n):
        records.append(make_record(
            record_id=f"su-{i + 1:05d}",
            team_size=int(1 + rng.integers(0, 12)),
            firm_age_years=float(np.round(rng.uniform(0.0, 9.0), 2)),
            capital_raised_usd=float(np.round(rng.uniform(0, 2e6), 2)),
            label_series_a=bool(rng.random() < positive_rate),
        ))
    return records


@pytest.fixture
def record() -> StartupRecord:
    return make_record()
