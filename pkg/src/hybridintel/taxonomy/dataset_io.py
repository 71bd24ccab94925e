"""Dataset interchange: CSV and JSON readers/writers.

CSV layout: a ``# schema_version=...`` comment line, then a fixed header
naming every StartupRecord field, one record per row. Booleans are
``true``/``false``, set-valued fields are semicolon-joined tokens, and
missing optionals are empty cells. The JSON form is an object with
``schema_version`` and a record-per-object ``records`` array using the
same field names.
"""

from __future__ import annotations

import csv
import io
import json
import os
from typing import Iterable, TextIO

from ..errors import DatasetParseError
from .records import FIELD_NAMES, StartupRecord, validate_dataset
from .schema import DEFAULT_SCHEMA, FINANCIAL_SUPPORT, KNOWLEDGE_SUPPORT, TaxonomySchema

_VERSION_PREFIX = "# schema_version="

_INT_FIELDS = {
    "competitor_count",
    "team_size",
    "team_field_backgrounds",
    "pilot_customers",
    "twitter_followers",
    "tweet_count",
}
_FLOAT_FIELDS = {
    "firm_age_years",
    "capital_raised_usd",
    "web_visits",
    "web_avg_duration_s",
    "web_backlinks",
    "web_bounce_rate",
    "tweet_sentiment",
}
_BOOL_FIELDS = {"proof_of_concept", "entrepreneurial_experience"}
_SET_FIELDS = {"knowledge_support": KNOWLEDGE_SUPPORT, "financial_support": FINANCIAL_SUPPORT}
_TEXT_FIELDS = {"product_innovativeness_text", "scalability_text", "vision_text"}


def parse_dataset(source: str | os.PathLike | TextIO, schema: TaxonomySchema = DEFAULT_SCHEMA,
                  fmt: str | None = None) -> list[StartupRecord]:
    """Parse a dataset file (path or open text stream) into validated records.

    ``fmt`` is "csv" or "json"; when None it is inferred from the path
    suffix (streams default to csv).
    """
    if isinstance(source, (str, os.PathLike)):
        path = os.fspath(source)
        if fmt is None:
            fmt = "json" if path.lower().endswith(".json") else "csv"
        with open(path, "r", encoding="utf-8", newline="") as handle:
            return parse_dataset(handle, schema=schema, fmt=fmt)
    if fmt == "json":
        records = _parse_json(source)
    else:
        records = _parse_csv(source)
    validate_dataset(records, schema)
    return records


def write_dataset(records: Iterable[StartupRecord], target: str | os.PathLike | TextIO,
                  fmt: str | None = None) -> None:
    """Serialize records; format inferred from the path suffix as in parse."""
    if isinstance(target, (str, os.PathLike)):
        path = os.fspath(target)
        if fmt is None:
            fmt = "json" if path.lower().endswith(".json") else "csv"
        with open(path, "w", encoding="utf-8", newline="") as handle:
            write_dataset(records, handle, fmt=fmt)
        return
    if fmt == "json":
        _write_json(records, target)
    else:
        _write_csv(records, target)


def dataset_to_csv_text(records: Iterable[StartupRecord]) -> str:
    buffer = io.StringIO()
    _write_csv(records, buffer)
    return buffer.getvalue()


def _parse_csv(stream: TextIO) -> list[StartupRecord]:
    first = stream.readline()
    if not first.startswith(_VERSION_PREFIX):
        raise DatasetParseError(
            f"missing schema version declaration (expected leading {_VERSION_PREFIX!r} line)",
            line=1,
        )
    version = first[len(_VERSION_PREFIX):].strip()
    if version != DEFAULT_SCHEMA.version:
        raise DatasetParseError(f"unsupported schema version {version!r}", line=1)

    reader = csv.reader(stream)
    try:
        header = next(reader)
    except StopIteration:
        raise DatasetParseError("empty document: header row missing", line=2) from None
    if tuple(header) != FIELD_NAMES:
        raise DatasetParseError(
            f"header mismatch: expected {list(FIELD_NAMES)}, got {header}", line=2
        )

    records = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num + 1  # +1 for the version comment line
        if len(row) != len(FIELD_NAMES):
            raise DatasetParseError(
                f"expected {len(FIELD_NAMES)} cells, got {len(row)}", line=line
            )
        cells = dict(zip(FIELD_NAMES, row))
        records.append(_record_from_cells(cells, line=line))
    return records


def _record_from_cells(cells: dict[str, str], line: int) -> StartupRecord:
    kwargs: dict[str, object] = {}
    for name, raw in cells.items():
        try:
            kwargs[name] = _parse_cell(name, raw)
        except ValueError as exc:
            raise DatasetParseError(
                f"field {name!r}: {exc}", line=line, record=cells.get("id") or None
            ) from None
    return StartupRecord(**kwargs)  # type: ignore[arg-type]


def _parse_cell(name: str, raw: str) -> object:
    if name in _TEXT_FIELDS or name in ("id", "b2b_b2c", "industry", "business_model_dna",
                                        "tech_hype_phase", "revenue_model", "education_level"):
        return raw
    if name in _BOOL_FIELDS:
        return _parse_bool(raw)
    if name == "label_series_a":
        return None if raw == "" else _parse_bool(raw)
    if name == "competitor_proximity_mean":
        return None if raw == "" else float(raw)
    if name in _INT_FIELDS:
        if raw == "":
            raise ValueError("missing required integer")
        return int(raw)
    if name in _FLOAT_FIELDS:
        if raw == "":
            raise ValueError("missing required number")
        return float(raw)
    if name in _SET_FIELDS:
        return frozenset(t for t in raw.split(";") if t)
    raise ValueError(f"unknown field {name!r}")


def _parse_bool(raw: str) -> bool:
    if raw == "true":
        return True
    if raw == "false":
        return False
    raise ValueError(f"expected 'true' or 'false', got {raw!r}")


def _format_cell(record: StartupRecord, name: str) -> str:
    value = getattr(record, name)
    if value is None:
        return ""
    if name in _BOOL_FIELDS or name == "label_series_a":
        return "true" if value else "false"
    if name in _SET_FIELDS:
        # vocabulary order keeps serialization deterministic
        return ";".join(t for t in _SET_FIELDS[name] if t in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(records: Iterable[StartupRecord], stream: TextIO) -> None:
    stream.write(f"{_VERSION_PREFIX}{DEFAULT_SCHEMA.version}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(FIELD_NAMES)
    for record in records:
        writer.writerow([_format_cell(record, name) for name in FIELD_NAMES])


def _record_to_obj(record: StartupRecord) -> dict[str, object]:
    obj: dict[str, object] = {}
    for name in FIELD_NAMES:
        value = getattr(record, name)
        if name in _SET_FIELDS:
            value = [t for t in _SET_FIELDS[name] if t in value]
        obj[name] = value
    return obj


def _write_json(records: Iterable[StartupRecord], stream: TextIO) -> None:
    doc = {
        "schema_version": DEFAULT_SCHEMA.version,
        "records": [_record_to_obj(r) for r in records],
    }
    json.dump(doc, stream, indent=2, sort_keys=True)
    stream.write("\n")


def _parse_json(stream: TextIO) -> list[StartupRecord]:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise DatasetParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise DatasetParseError("document must be an object declaring schema_version")
    if doc["schema_version"] != DEFAULT_SCHEMA.version:
        raise DatasetParseError(f"unsupported schema version {doc['schema_version']!r}")
    raw_records = doc.get("records")
    if not isinstance(raw_records, list):
        raise DatasetParseError("'records' must be an array of objects")

    records = []
    for index, obj in enumerate(raw_records):
        if not isinstance(obj, dict):
            raise DatasetParseError("record must be an object", record=str(index))
        unknown = set(obj) - set(FIELD_NAMES)
        if unknown:
            raise DatasetParseError(
                f"unknown fields {sorted(unknown)}", record=str(obj.get('id', index))
            )
        kwargs: dict[str, object] = {}
        for name in FIELD_NAMES:
            if name not in obj or obj[name] is None:
                if name == "label_series_a" or name == "competitor_proximity_mean":
                    kwargs[name] = None
                    continue
                raise DatasetParseError(
                    f"field {name!r} missing", record=str(obj.get("id", index))
                )
            value = obj[name]
            if name in _SET_FIELDS:
                value = frozenset(value)
            elif name in _INT_FIELDS and isinstance(value, float) and value.is_integer():
                value = int(value)
            elif name in _FLOAT_FIELDS and isinstance(value, int):
                value = float(value)
            kwargs[name] = value
        try:
            records.append(StartupRecord(**kwargs))  # type: ignore[arg-type]
        except TypeError as exc:
            raise DatasetParseError(str(exc), record=str(obj.get("id", index))) from None
    return records


def label_counts(records: Iterable[StartupRecord]) -> dict[str, int]:
    """Counts of positive / negative / unlabeled records."""
    counts = {"positive": 0, "negative": 0, "unlabeled": 0}
    for record in records:
        if record.label_series_a is None:
            counts["unlabeled"] += 1
        elif record.label_series_a:
            counts["positive"] += 1
        else:
            counts["negative"] += 1
    return counts
