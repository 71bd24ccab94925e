"""Naive Bayes over mixed feature types.

Columns whose training values are all in {0, 1} get Bernoulli
class-conditionals with Laplace smoothing ``(count + alpha)/(n_c + 2*alpha)``;
the remaining columns get Gaussian class-conditionals with a variance
floor. Posteriors are computed in log space.
"""

from __future__ import annotations

import numpy as np


def fit(x: np.ndarray, y: np.ndarray, hp: dict, seed: int) -> dict:
    del seed  # closed-form estimation
    alpha = float(hp["alpha"])
    var_floor = float(hp["var_floor"])

    is_binary = np.all((x == 0.0) | (x == 1.0), axis=0)
    params: dict = {
        "alpha": alpha,
        "is_binary": is_binary,
        "log_prior": np.empty(2, dtype=np.float64),
        "bernoulli_theta": np.zeros((2, x.shape[1]), dtype=np.float64),
        "gauss_mean": np.zeros((2, x.shape[1]), dtype=np.float64),
        "gauss_var": np.ones((2, x.shape[1]), dtype=np.float64),
    }
    n = x.shape[0]
    for c in (0, 1):
        rows = x[y == c]
        n_c = rows.shape[0]
        params["log_prior"][c] = np.log(n_c / n)
        counts = rows.sum(axis=0)
        params["bernoulli_theta"][c] = (counts + alpha) / (n_c + 2.0 * alpha)
        params["gauss_mean"][c] = rows.mean(axis=0)
        params["gauss_var"][c] = np.maximum(rows.var(axis=0), var_floor)
    return params


def _class_log_likelihood(params: dict, x: np.ndarray, c: int) -> np.ndarray:
    binary = params["is_binary"]
    theta = params["bernoulli_theta"][c][binary]
    xb = x[:, binary]
    with np.errstate(divide="ignore", invalid="ignore"):
        # alpha = 0 can give log(0) = -inf; that is the exact unsmoothed answer
        ll_b = xb * np.log(theta) + (1.0 - xb) * np.log(1.0 - theta)
    ll_b = np.where(np.isnan(ll_b), -np.inf, ll_b)

    mean = params["gauss_mean"][c][~binary]
    var = params["gauss_var"][c][~binary]
    xg = x[:, ~binary]
    ll_g = -0.5 * (np.log(2.0 * np.pi * var) + (xg - mean) ** 2 / var)

    return params["log_prior"][c] + ll_b.sum(axis=1) + ll_g.sum(axis=1)


def predict(params: dict, x: np.ndarray) -> np.ndarray:
    ll0 = _class_log_likelihood(params, x, 0)
    ll1 = _class_log_likelihood(params, x, 1)
    out = np.empty(x.shape[0], dtype=np.float64)

    both_dead = np.isneginf(ll0) & np.isneginf(ll1)
    out[both_dead] = 0.5  # no class explains the input; stay uncommitted
    live = ~both_dead
    # p1 = 1 / (1 + exp(ll0 - ll1)), computed stably
    diff = ll0[live] - ll1[live]
    out[live] = 1.0 / (1.0 + np.exp(np.clip(diff, -745.0, 745.0)))
    return out
