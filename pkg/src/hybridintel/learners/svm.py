"""Linear soft-margin SVM trained by full-batch projected subgradient descent.

Objective (labels in {-1, +1}, bias folded in as an always-on feature):

    J(w) = (lambda/2) ||w||^2 + mean_i max(0, 1 - y_i w.x_i),  lambda = 1/(c*n)

with step 1/(lambda*t) and projection onto the ||w|| <= 1/sqrt(lambda)
ball. Probabilities come from a sigmoid calibrated on the training
margins (Platt scaling, fitted by damped Newton on the smoothed targets).
"""

from __future__ import annotations

import numpy as np

from ..errors import TrainingError

# calibrated probabilities stay inside the open interval (0, 1)
_PROB_EPS = 1e-12


def fit(x: np.ndarray, y: np.ndarray, hp: dict, seed: int) -> dict:
    del seed  # deterministic full-batch optimization
    c = float(hp["c"])
    steps = int(hp["steps"])
    n = x.shape[0]
    lam = 1.0 / (c * n)

    x1 = np.hstack([x, np.ones((n, 1))])
    sy = np.where(y == 1, 1.0, -1.0)
    w = np.zeros(x1.shape[1], dtype=np.float64)
    radius = 1.0 / np.sqrt(lam)

    for t in range(1, steps + 1):
        margins = sy * (x1 @ w)
        violating = margins < 1.0
        grad = lam * w - (x1[violating] * sy[violating, None]).sum(axis=0) / n
        if not np.all(np.isfinite(grad)):
            raise TrainingError(f"svm subgradient became non-finite at step {t}")
        w = w - grad / (lam * t)
        norm = float(np.linalg.norm(w))
        if norm > radius:
            w = w * (radius / norm)

    train_margins = x1 @ w
    a, b = _fit_platt(train_margins, y)
    return {"weights": w[:-1], "bias": float(w[-1]), "platt_a": a, "platt_b": b}


def decision_margin(params: dict, x: np.ndarray) -> np.ndarray:
    return x @ params["weights"] + params["bias"]


def predict(params: dict, x: np.ndarray) -> np.ndarray:
    margins = decision_margin(params, x)
    return _platt_probability(margins, params["platt_a"], params["platt_b"])


def _platt_probability(margins: np.ndarray, a: float, b: float) -> np.ndarray:
    z = a * margins + b
    p = np.empty_like(z)
    pos = z >= 0
    p[pos] = np.exp(-z[pos]) / (1.0 + np.exp(-z[pos]))
    p[~pos] = 1.0 / (1.0 + np.exp(z[~pos]))
    return np.clip(p, _PROB_EPS, 1.0 - _PROB_EPS)


def _fit_platt(margins: np.ndarray, y: np.ndarray,
               max_iter: int = 100, min_step: float = 1e-10,
               ridge: float = 1e-12) -> tuple[float, float]:
    """Fit P(y=1|m) = 1/(1 + exp(a*m + b)) by Newton with backtracking.

    Targets are the smoothed class frequencies recommended for Platt
    scaling, which keeps the fit defined even for separable margins.
    """
    n_pos = int((y == 1).sum())
    n_neg = len(y) - n_pos
    hi = (n_pos + 1.0) / (n_pos + 2.0)
    lo = 1.0 / (n_neg + 2.0)
    t = np.where(y == 1, hi, lo)

    a = 0.0
    b = float(np.log((n_neg + 1.0) / (n_pos + 1.0)))

    def objective(av: float, bv: float) -> float:
        # -sum(t*log(p) + (1-t)*log(1-p)) with p = sigma(-z) reduces to
        # sum(logaddexp(0, z) - (1-t)*z), which is overflow-safe
        z = av * margins + bv
        return float(np.sum(np.logaddexp(0.0, z) - (1.0 - t) * z))

    fval = objective(a, b)
    for _ in range(max_iter):
        z = a * margins + b
        p = np.where(z >= 0, np.exp(-np.maximum(z, 0)) / (1.0 + np.exp(-np.maximum(z, 0))),
                     1.0 / (1.0 + np.exp(np.minimum(z, 0))))
        grad_z = t - p  # dF/dz_i = sigma(z) - (1 - t)
        g_a = float(np.sum(grad_z * margins))
        g_b = float(np.sum(grad_z))
        if abs(g_a) < 1e-12 and abs(g_b) < 1e-12:
            break
        wgt = p * (1.0 - p)
        h_aa = float(np.sum(wgt * margins * margins)) + ridge
        h_ab = float(np.sum(wgt * margins))
        h_bb = float(np.sum(wgt)) + ridge
        det = h_aa * h_bb - h_ab * h_ab
        if det <= 0:
            break
        da = -(h_bb * g_a - h_ab * g_b) / det
        db = -(h_aa * g_b - h_ab * g_a) / det

        step = 1.0
        while step >= min_step:
            na, nb = a + step * da, b + step * db
            nf = objective(na, nb)
            if nf < fval + 1e-12:
                a, b, fval = na, nb, nf
                break
            step /= 2.0
        else:
            break
    return a, b
