"""Confusion matrices, Matthews correlation coefficient, accuracy, AUC."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import ConfigError


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "tn", "fn"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"confusion cell {name} must be a nonnegative int, got {value!r}")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @classmethod
    def from_predictions(cls, labels: Sequence[bool],
                         predicted: Sequence[bool]) -> "ConfusionMatrix":
        if len(labels) != len(predicted):
            raise ConfigError(
                f"labels ({len(labels)}) and predictions ({len(predicted)}) differ in length"
            )
        tp = fp = tn = fn = 0
        for truth, guess in zip(labels, predicted):
            if truth and guess:
                tp += 1
            elif truth and not guess:
                fn += 1
            elif not truth and guess:
                fp += 1
            else:
                tn += 1
        return cls(tp=tp, fp=fp, tn=tn, fn=fn)


def mcc(cm: ConfusionMatrix) -> float:
    """Matthews correlation coefficient; 0.0 when any marginal is empty.

    (tp*tn - fp*fn) / sqrt((tp+fp)(tp+fn)(tn+fp)(tn+fn))
    """
    tp, fp, tn, fn = cm.tp, cm.fp, cm.tn, cm.fn
    denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
    if denom == 0:
        return 0.0
    return (tp * tn - fp * fn) / math.sqrt(denom)


def accuracy(cm: ConfusionMatrix) -> float:
    if cm.total == 0:
        return 0.0
    return (cm.tp + cm.tn) / cm.total


def auc(labels: Sequence[bool], probabilities: Sequence[float]) -> float:
    """Area under the ROC curve via the rank statistic (ties share rank)."""
    y = np.asarray([1 if b else 0 for b in labels])
    p = np.asarray(probabilities, dtype=np.float64)
    n_pos = int(y.sum())
    n_neg = len(y) - n_pos
    if n_pos == 0 or n_neg == 0:
        return 0.5
    order = np.argsort(p, kind="stable")
    ranks = np.empty(len(p), dtype=np.float64)
    sorted_p = p[order]
    i = 0
    while i < len(p):
        j = i
        while j + 1 < len(p) and sorted_p[j + 1] == sorted_p[i]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0  # mean rank, 1-based
        i = j + 1
    rank_sum_pos = float(ranks[y == 1].sum())
    return (rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)
