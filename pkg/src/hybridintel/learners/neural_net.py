"""Single-hidden-layer neural network binary classifier.

tanh hidden layer, sigmoid output, mean cross-entropy loss, trained by
full-batch gradient descent via backpropagation. Initial weights are
uniform(-init_scale, +init_scale) draws from the learner seed, so
training is fully reproducible.
"""

from __future__ import annotations

import numpy as np

from ..errors import TrainingError
from .logistic import sigmoid


def init_params(d: int, hidden: int, init_scale: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    count = d * hidden + hidden + hidden + 1
    return rng.uniform(-init_scale, init_scale, size=count)


def unpack(theta: np.ndarray, d: int, hidden: int):
    w1 = theta[: d * hidden].reshape(d, hidden)
    b1 = theta[d * hidden: d * hidden + hidden]
    w2 = theta[d * hidden + hidden: d * hidden + 2 * hidden]
    b2 = theta[-1]
    return w1, b1, w2, b2


def loss_and_grad(theta: np.ndarray, x: np.ndarray, y: np.ndarray,
                  hidden: int) -> tuple[float, np.ndarray]:
    """Mean cross-entropy and its analytic gradient over flattened parameters."""
    n, d = x.shape
    w1, b1, w2, b2 = unpack(theta, d, hidden)

    z1 = x @ w1 + b1
    h = np.tanh(z1)
    z2 = h @ w2 + b2
    # nll_i = softplus(z2) - y*z2, exact for a sigmoid output
    loss = float(np.mean(np.logaddexp(0.0, z2) - y * z2))

    dz2 = (sigmoid(z2) - y) / n
    gw2 = h.T @ dz2
    gb2 = dz2.sum()
    dh = np.outer(dz2, w2)
    dz1 = dh * (1.0 - h * h)
    gw1 = x.T @ dz1
    gb1 = dz1.sum(axis=0)

    grad = np.concatenate([gw1.ravel(), gb1, gw2, np.array([gb2])])
    return loss, grad


def fit(x: np.ndarray, y: np.ndarray, hp: dict, seed: int) -> dict:
    hidden = int(hp["hidden"])
    step = float(hp["step"])
    iterations = int(hp["iterations"])
    theta = init_params(x.shape[1], hidden, float(hp["init_scale"]), seed)

    history = np.empty(iterations + 1, dtype=np.float64)
    for t in range(iterations):
        loss, grad = loss_and_grad(theta, x, y, hidden)
        if not np.isfinite(loss):
            raise TrainingError(f"neural net loss became non-finite at iteration {t}")
        history[t] = loss
        theta = theta - step * grad
    final_loss, _ = loss_and_grad(theta, x, y, hidden)
    if not np.isfinite(final_loss):
        raise TrainingError(f"neural net loss became non-finite at iteration {iterations}")
    history[iterations] = final_loss
    return {"theta": theta, "hidden": hidden, "loss_history": history}


def predict(params: dict, x: np.ndarray) -> np.ndarray:
    w1, b1, w2, b2 = unpack(params["theta"], x.shape[1], params["hidden"])
    return sigmoid(np.tanh(x @ w1 + b1) @ w2 + b2)
