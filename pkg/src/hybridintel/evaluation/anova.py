"""Two-way analysis of variance for method x fold score matrices.

The design is a randomized block without replication: one observation
per (method, fold) cell. Sums of squares decompose as

    SS_total = SS_method + SS_fold + SS_error

with degrees of freedom (a-1), (b-1) and (a-1)(b-1) for a methods and b
folds. F statistics are mean-square ratios against MS_error; p-values
come from the F distribution survival function, evaluated through a
continued-fraction regularized incomplete beta (no external stats
dependency).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import ConfigError, DegenerateDesignError

_CF_MAX_ITER = 300
_CF_EPS = 3e-16
_CF_FPMIN = 1e-300


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Modified Lentz evaluation of the incomplete beta continued fraction."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_FPMIN:
        d = _CF_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_FPMIN:
            d = _CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _CF_FPMIN:
            c = _CF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ConfigError(f"incomplete beta failed to converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ConfigError(f"incomplete beta requires positive shape, got a={a}, b={b}")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    log_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                 + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def f_survival(f_value: float, df_num: float, df_den: float) -> float:
    """P(F >= f_value) for an F(df_num, df_den) variable."""
    if df_num <= 0 or df_den <= 0:
        raise ConfigError("F distribution degrees of freedom must be positive")
    if f_value <= 0.0:
        return 1.0
    x = df_den / (df_den + df_num * f_value)
    return regularized_incomplete_beta(df_den / 2.0, df_num / 2.0, x)


# relative floor below which the residual is treated as exactly additive
_DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class AnovaTable:
    n_methods: int
    n_folds: int
    ss_method: float
    ss_fold: float
    ss_error: float
    ss_total: float
    df_method: int
    df_fold: int
    df_error: int
    ms_method: float
    ms_fold: float
    ms_error: float
    f_method: float
    p_method: float
    f_fold: float
    p_fold: float

    def to_obj(self) -> dict:
        return {
            "n_methods": self.n_methods,
            "n_folds": self.n_folds,
            "ss_method": self.ss_method,
            "ss_fold": self.ss_fold,
            "ss_error": self.ss_error,
            "ss_total": self.ss_total,
            "df_method": self.df_method,
            "df_fold": self.df_fold,
            "df_error": self.df_error,
            "ms_method": self.ms_method,
            "ms_fold": self.ms_fold,
            "ms_error": self.ms_error,
            "f_method": self.f_method,
            "p_method": self.p_method,
            "f_fold": self.f_fold,
            "p_fold": self.p_fold,
        }


def anova_two_way(scores: Sequence[Sequence[float]] | np.ndarray) -> AnovaTable:
    """Two-way ANOVA of a methods x folds score matrix (one value per cell)."""
    matrix = np.asarray(scores, dtype=np.float64)
    if matrix.ndim != 2:
        raise ConfigError(f"scores must be a 2-D method x fold matrix, got shape {matrix.shape}")
    a, b = matrix.shape
    if a < 2 or b < 2:
        raise ConfigError(f"two-way ANOVA needs >= 2 methods and >= 2 folds, got {a} x {b}")
    if not np.all(np.isfinite(matrix)):
        raise ConfigError("scores contain non-finite values")

    grand = matrix.mean()
    method_means = matrix.mean(axis=1)
    fold_means = matrix.mean(axis=0)

    ss_total = float(((matrix - grand) ** 2).sum())
    ss_method = float(b * ((method_means - grand) ** 2).sum())
    ss_fold = float(a * ((fold_means - grand) ** 2).sum())
    residual = matrix - method_means[:, None] - fold_means[None, :] + grand
    ss_error = float((residual ** 2).sum())

    df_method = a - 1
    df_fold = b - 1
    df_error = (a - 1) * (b - 1)
    ms_method = ss_method / df_method
    ms_fold = ss_fold / df_fold
    ms_error = ss_error / df_error

    floor = _DEGENERATE_RTOL * max(ss_total, 1e-30)
    if ss_error <= floor:
        if ss_method > floor:
            raise DegenerateDesignError(
                "perfectly additive data: error sum of squares is zero while "
                "methods differ, so no F statistic is defined"
            )
        # zero method variance: a zero-numerator F is 0 by convention even
        # with a zero residual; the fold factor then explains everything
        f_method, p_method = 0.0, 1.0
        f_fold = math.inf if ss_fold > floor else 0.0
        p_fold = 0.0 if ss_fold > floor else 1.0
    else:
        f_method = ms_method / ms_error
        f_fold = ms_fold / ms_error
        p_method = f_survival(f_method, df_method, df_error)
        p_fold = f_survival(f_fold, df_fold, df_error)
    return AnovaTable(
        n_methods=a,
        n_folds=b,
        ss_method=ss_method,
        ss_fold=ss_fold,
        ss_error=ss_error,
        ss_total=ss_total,
        df_method=df_method,
        df_fold=df_fold,
        df_error=df_error,
        ms_method=ms_method,
        ms_fold=ms_fold,
        ms_error=ms_error,
        f_method=f_method,
        p_method=p_method,
        f_fold=f_fold,
        p_fold=p_fold,
    )
