"""L2-regularized logistic regression trained by full-batch gradient descent.

Minimizes mean negative log-likelihood plus (l2/2)*||w||^2 (bias
unregularized). The loss uses the softplus identity
``nll_i = softplus(z_i) - y_i * z_i``, which is exact and overflow-safe.
"""

from __future__ import annotations

import numpy as np

from ..errors import TrainingError


def sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def loss_and_grad(wb: np.ndarray, x: np.ndarray, y: np.ndarray,
                  l2: float) -> tuple[float, np.ndarray]:
    """Objective and analytic gradient at ``wb`` (weights with trailing bias)."""
    n = x.shape[0]
    w, b = wb[:-1], wb[-1]
    z = x @ w + b
    nll = float(np.mean(np.logaddexp(0.0, z) - y * z))
    loss = nll + 0.5 * l2 * float(w @ w)
    residual = (sigmoid(z) - y) / n
    grad = np.empty_like(wb)
    grad[:-1] = x.T @ residual + l2 * w
    grad[-1] = residual.sum()
    return loss, grad


def fit(x: np.ndarray, y: np.ndarray, hp: dict, seed: int) -> dict:
    del seed  # the optimization is deterministic from a zero start
    l2 = float(hp["l2"])
    step = float(hp["step"])
    iterations = int(hp["iterations"])

    wb = np.zeros(x.shape[1] + 1, dtype=np.float64)
    history = np.empty(iterations + 1, dtype=np.float64)
    for t in range(iterations):
        loss, grad = loss_and_grad(wb, x, y, l2)
        if not np.isfinite(loss):
            raise TrainingError(f"logistic regression loss became non-finite at iteration {t}")
        history[t] = loss
        wb = wb - step * grad
    final_loss, _ = loss_and_grad(wb, x, y, l2)
    if not np.isfinite(final_loss):
        raise TrainingError(f"logistic regression loss became non-finite at iteration {iterations}")
    history[iterations] = final_loss
    return {"weights": wb[:-1], "bias": float(wb[-1]), "loss_history": history}


def predict(params: dict, x: np.ndarray) -> np.ndarray:
    return sigmoid(x @ params["weights"] + params["bias"])
