"""Cross-validation fold plans.

Folds are mutually exclusive, jointly exhaustive, and size-balanced
within one record. Stratified plans additionally balance per-fold
positive counts within one by assigning each class round-robin, with the
negative cycle starting where the positive one left off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import ConfigError, ValidationError
from ..taxonomy.records import StartupRecord


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: dict[str, int]
    stratified: bool
    seed: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ConfigError(f"fold count must be >= 2, got {self.k}")
        bad = {rid: f for rid, f in self.assignments.items() if not 0 <= f < self.k}
        if bad:
            raise ConfigError(f"fold indices outside [0, {self.k}): {bad}")

    def fold_members(self) -> list[list[str]]:
        members: list[list[str]] = [[] for _ in range(self.k)]
        for rid, fold in self.assignments.items():
            members[fold].append(rid)
        return members

    def test_ids(self, fold: int) -> list[str]:
        return [rid for rid, f in self.assignments.items() if f == fold]

    def train_ids(self, fold: int) -> list[str]:
        return [rid for rid, f in self.assignments.items() if f != fold]

    def to_obj(self) -> dict:
        return {
            "k": self.k,
            "stratified": self.stratified,
            "seed": self.seed,
            "assignments": dict(self.assignments),
        }


def kfold_split(records: Sequence[StartupRecord], k: int = 10,
                stratified: bool = True, seed: int = 0) -> FoldPlan:
    """Deterministic k-fold plan over the records."""
    n = len(records)
    if k < 2:
        raise ConfigError(f"fold count must be >= 2, got {k}")
    if n < k:
        raise ConfigError(f"{n} records cannot fill {k} folds")

    rng = np.random.default_rng(seed)
    assignments: dict[str, int] = {}

    if not stratified:
        order = rng.permutation(n)
        offset = int(rng.integers(0, k))
        for position, index in enumerate(order):
            assignments[records[index].id] = (position + offset) % k
        return FoldPlan(k=k, assignments=assignments, stratified=False, seed=seed)

    unlabeled = [r.id for r in records if r.label_series_a is None]
    if unlabeled:
        raise ValidationError("label_series_a", unlabeled[0],
                              "stratified folds require labeled records")
    positives = [i for i, r in enumerate(records) if r.label_series_a]
    negatives = [i for i, r in enumerate(records) if not r.label_series_a]
    if not positives or not negatives:
        raise ConfigError("stratified folds require at least one record of each class")

    offset = int(rng.integers(0, k))
    for class_indices in (positives, negatives):
        shuffled = rng.permutation(len(class_indices))
        for position, local in enumerate(shuffled):
            assignments[records[class_indices[local]].id] = (position + offset) % k
        # continue the cycle so overall fold sizes stay within one
        offset = (offset + len(class_indices)) % k
    return FoldPlan(k=k, assignments=assignments, stratified=True, seed=seed)
