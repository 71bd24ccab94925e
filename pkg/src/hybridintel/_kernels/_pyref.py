"""Pure-numpy reference implementation of the hot kernels.

The compiled backend (``_core.pyx``) mirrors these functions operation
for operation so both produce bit-identical results: both gather
candidate columns through the same numpy stable argsort, split
statistics are integer counts, impurities use the same float64
expressions, and ties resolve to the first candidate in scan order.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure-python"

# impurity gains at or below this threshold do not justify a split
GAIN_EPS = 1e-12


def best_split(x: np.ndarray, y: np.ndarray, min_leaf: int):
    """Best Gini split over candidate feature columns.

    ``x`` is the (n, f) float64 matrix of the node's rows restricted to the
    candidate features; ``y`` the (n,) int64 0/1 labels. Returns
    ``(feature_index, threshold, gain)`` with ``feature_index == -1`` when
    no split has positive gain or satisfies the leaf-size floor. Rows with
    value <= threshold go left.
    """
    n = x.shape[0]
    if n < 2 * min_leaf:
        return -1, 0.0, 0.0
    total_pos = int(y.sum())
    if total_pos == 0 or total_pos == n:
        return -1, 0.0, 0.0

    nf = float(n)
    p_parent = total_pos / nf
    q_parent = (n - total_pos) / nf
    parent_gini = 1.0 - p_parent * p_parent - q_parent * q_parent

    order = np.argsort(x, axis=0, kind="stable")
    xs_all = np.take_along_axis(x, order, axis=0)
    cum_pos_all = np.cumsum(y[order], axis=0)

    best_feat = -1
    best_thr = 0.0
    best_gain = 0.0
    # left sizes considered: min_leaf .. n - min_leaf
    sizes = np.arange(min_leaf, n - min_leaf + 1)

    for j in range(x.shape[1]):
        xs = xs_all[:, j]
        boundary = xs[sizes - 1] < xs[sizes]
        if not boundary.any():
            continue

        nl = sizes.astype(np.float64)
        nr = nf - nl
        pl = cum_pos_all[sizes - 1, j].astype(np.float64)
        pr = float(total_pos) - pl
        ql = nl - pl
        qr = nr - pr
        gini_l = 1.0 - (pl / nl) * (pl / nl) - (ql / nl) * (ql / nl)
        gini_r = 1.0 - (pr / nr) * (pr / nr) - (qr / nr) * (qr / nr)
        gain = parent_gini - (nl * gini_l + nr * gini_r) / nf
        gain[~boundary] = -np.inf

        k = int(np.argmax(gain))  # first maximum, matching the scan order
        g = float(gain[k])
        if g > best_gain and g > GAIN_EPS:
            i = int(sizes[k])
            thr = (xs[i - 1] + xs[i]) / 2.0
            if thr >= xs[i]:  # adjacent floats: keep the partition exact
                thr = float(xs[i - 1])
            best_feat = j
            best_thr = float(thr)
            best_gain = g
    return best_feat, best_thr, best_gain


def apply_tree(feature: np.ndarray, threshold: np.ndarray, left: np.ndarray,
               right: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Route each row of ``x`` to its leaf node index.

    Trees are stored as parallel arrays; ``feature[i] < 0`` marks a leaf.
    """
    n = x.shape[0]
    nodes = np.zeros(n, dtype=np.int64)
    active = feature[nodes] >= 0
    while active.any():
        idx = np.nonzero(active)[0]
        cur = nodes[idx]
        feats = feature[cur]
        go_left = x[idx, feats] <= threshold[cur]
        nodes[idx] = np.where(go_left, left[cur], right[cur])
        active[idx] = feature[nodes[idx]] >= 0
    return nodes
