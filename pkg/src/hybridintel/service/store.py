"""File-backed append-only judgment store.

The store file is the same CSV shape as every other judgment file in the
pipeline, so a collection run's store can be fed straight into
aggregation. Appends are serialized under a lock, written, flushed and
fsynced before the call returns; a judgment is only acknowledged once it
is durable. (rater_id, record_id) uniqueness is enforced on append.
"""

from __future__ import annotations

import csv
import io
import os
import threading
from typing import Iterable

from ..crowd.judgments import (
    JUDGMENT_CSV_HEADER,
    Judgment,
    judgment_from_row,
    judgment_to_row,
)
from ..errors import DuplicateJudgmentError, HybridIntelError


class JudgmentStore:
    """Append-only judgment collection keyed by (rater_id, record_id)."""

    def __init__(self, path: str | os.PathLike):
        self._path = os.fspath(path)
        self._lock = threading.Lock()
        self._judgments: list[Judgment] = []
        self._keys: set[tuple[str, str]] = set()
        self._open()

    def _open(self) -> None:
        if os.path.exists(self._path):
            with open(self._path, "r", encoding="utf-8", newline="") as handle:
                reader = csv.reader(handle)
                header = next(reader, None)
                if header is not None and tuple(header) != JUDGMENT_CSV_HEADER:
                    raise HybridIntelError(
                        f"store file {self._path} has an unexpected header: {header}"
                    )
                for row in reader:
                    if not row:
                        continue
                    judgment = judgment_from_row(row)
                    self._judgments.append(judgment)
                    self._keys.add((judgment.rater_id, judgment.record_id))
            self._handle = open(self._path, "a", encoding="utf-8", newline="")
        else:
            self._handle = open(self._path, "w", encoding="utf-8", newline="")
            writer = csv.writer(self._handle, lineterminator="\n")
            writer.writerow(JUDGMENT_CSV_HEADER)
            self._handle.flush()
            os.fsync(self._handle.fileno())

    @property
    def path(self) -> str:
        return self._path

    def append(self, judgment: Judgment) -> None:
        """Durably store one judgment; raises on duplicate (rater, record)."""
        key = (judgment.rater_id, judgment.record_id)
        with self._lock:
            if key in self._keys:
                raise DuplicateJudgmentError(judgment.rater_id, judgment.record_id)
            buffer = io.StringIO()
            csv.writer(buffer, lineterminator="\n").writerow(judgment_to_row(judgment))
            self._handle.write(buffer.getvalue())
            self._handle.flush()
            os.fsync(self._handle.fileno())
            self._keys.add(key)
            self._judgments.append(judgment)

    def __len__(self) -> int:
        with self._lock:
            return len(self._judgments)

    def __contains__(self, key: tuple[str, str]) -> bool:
        with self._lock:
            return key in self._keys

    def all_judgments(self) -> list[Judgment]:
        """Snapshot of every committed judgment, in append order."""
        with self._lock:
            return list(self._judgments)

    def count_for(self, record_id: str, rater_class: str | None = None) -> int:
        with self._lock:
            return sum(
                1 for j in self._judgments
                if j.record_id == record_id
                and (rater_class is None or j.rater_class == rater_class)
            )

    def extend(self, judgments: Iterable[Judgment]) -> int:
        """Append many judgments; returns the number stored."""
        stored = 0
        for judgment in judgments:
            self.append(judgment)
            stored += 1
        return stored

    def close(self) -> None:
        with self._lock:
            if not self._handle.closed:
                self._handle.close()

    def __enter__(self) -> "JudgmentStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
