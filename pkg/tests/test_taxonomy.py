"""Dataset parsing, validation, and round-trip serialization."""

import io

import pytest

from hybridintel.errors import DatasetParseError, ValidationError
from hybridintel.taxonomy import (
    FIELD_NAMES,
    dataset_to_csv_text,
    label_counts,
    parse_dataset,
    write_dataset,
)
from hybridintel.evaluation.synthetic import SyntheticConfig, generate_synthetic_dataset

from conftest import make_record, make_records


def parse_csv_text(text: str):
    return parse_dataset(io.StringIO(text), fmt="csv")


class TestParseCsv:
    def test_single_wellformed_row(self):
        text = dataset_to_csv_text([make_record()])
        records = parse_csv_text(text)
        assert len(records) == 1
        assert records[0] == make_record()

    def test_row_order_preserved(self):
        originals = make_records(20, seed=3)
        parsed = parse_csv_text(dataset_to_csv_text(originals))
        assert [r.id for r in parsed] == [r.id for r in originals]

    def test_negative_firm_age_names_field(self):
        text = dataset_to_csv_text([make_record(firm_age_years=-1.0)])
        with pytest.raises(ValidationError) as exc:
            parse_csv_text(text)
        assert exc.value.field == "firm_age_years"

    def test_duplicate_id_rejected(self):
        text = dataset_to_csv_text([make_record("dup"), make_record("dup")])
        with pytest.raises(ValidationError) as exc:
            parse_csv_text(text)
        assert exc.value.field == "id"
        assert "unique" in exc.value.constraint

    def test_missing_version_line(self):
        text = dataset_to_csv_text([make_record()])
        headerless = "\n".join(text.splitlines()[1:])
        with pytest.raises(DatasetParseError, match="schema version"):
            parse_csv_text(headerless)

    def test_header_mismatch(self):
        text = dataset_to_csv_text([make_record()])
        lines = text.splitlines()
        lines[1] = lines[1].replace("firm_age_years", "firm_age")
        with pytest.raises(DatasetParseError, match="header mismatch"):
            parse_csv_text("\n".join(lines))

    def test_malformed_number_reports_line(self):
        text = dataset_to_csv_text([make_record()])
        bad = text.replace("2.5", "two-and-a-half")
        with pytest.raises(DatasetParseError) as exc:
            parse_csv_text(bad)
        assert exc.value.line == 3  # version line, header, first data row

    def test_unknown_categorical_rejected(self):
        text = dataset_to_csv_text([make_record(revenue_model="subscription")])
        bad = text.replace("subscription", "donations")
        with pytest.raises(ValidationError) as exc:
            parse_csv_text(bad)
        assert exc.value.field == "revenue_model"

    def test_synthetic_1500_rows(self, tmp_path):
        """The planned-experiment scale: 1500 startups, labels preserved."""
        config = SyntheticConfig(n_records=1500, seed=7, base_rate=0.6)
        records, _ = generate_synthetic_dataset(config)
        path = tmp_path / "data.csv"
        write_dataset(records, path)
        parsed = parse_dataset(path)
        assert len(parsed) == 1500
        assert label_counts(parsed) == label_counts(records)


class TestRoundTrip:
    def test_csv_roundtrip_exact(self):
        originals = make_records(40, seed=11)
        originals[3] = make_record(
            "su-00004",
            competitor_proximity_mean=None,
            vision_text='line one\nline two, with "quotes"',
            label_series_a=None,
            firm_age_years=0.30000000000000004,
        )
        parsed = parse_csv_text(dataset_to_csv_text(originals))
        assert parsed == originals

    def test_json_roundtrip_exact(self, tmp_path):
        originals = make_records(25, seed=2)
        originals[0] = make_record("su-00001", competitor_proximity_mean=None)
        path = tmp_path / "data.json"
        write_dataset(originals, path)
        assert parse_dataset(path) == originals

    def test_set_fields_roundtrip(self):
        record = make_record(
            knowledge_support=frozenset({"business angel", "accelerator"}),
            financial_support=frozenset(),
        )
        parsed = parse_csv_text(dataset_to_csv_text([record]))[0]
        assert parsed.knowledge_support == {"business angel", "accelerator"}
        assert parsed.financial_support == frozenset()


class TestRecordValidation:
    def test_bounce_rate_above_one(self):
        from hybridintel.taxonomy import DEFAULT_SCHEMA
        with pytest.raises(ValidationError) as exc:
            make_record(web_bounce_rate=1.2).validate(DEFAULT_SCHEMA)
        assert exc.value.field == "web_bounce_rate"

    def test_team_size_zero(self):
        from hybridintel.taxonomy import DEFAULT_SCHEMA
        with pytest.raises(ValidationError) as exc:
            make_record(team_size=0).validate(DEFAULT_SCHEMA)
        assert exc.value.field == "team_size"

    def test_unknown_support_token(self):
        from hybridintel.taxonomy import DEFAULT_SCHEMA
        with pytest.raises(ValidationError) as exc:
            make_record(knowledge_support=frozenset({"government"})).validate(DEFAULT_SCHEMA)
        assert exc.value.field == "knowledge_support"

    def test_field_names_cover_all_columns(self):
        assert len(FIELD_NAMES) == 29
        assert FIELD_NAMES[0] == "id"
        assert FIELD_NAMES[-1] == "label_series_a"
