"""Random forest of bagged CART trees.

Trees split on Gini impurity over per-split random feature subsets of
size ceil(sqrt(d)). Splits with no impurity gain are refused; leaves
store positive-class frequencies. The forest probability is the
fraction of trees whose leaf majority votes positive (leaf frequency
>= 0.5 counts as positive, matching the classifier's tie rule).

The split search and tree traversal run on the selected kernel backend
(compiled or pure-python; both give identical trees).
"""

from __future__ import annotations

import math

import numpy as np

from .._kernels import apply_tree, best_split

_NO_FEATURE = -1


def _build_tree(x: np.ndarray, y: np.ndarray, max_depth: int, min_leaf: int,
                n_subset: int, rng: np.random.Generator) -> dict:
    """Grow one tree into parallel node arrays (feature < 0 marks a leaf).

    Depth-first with an explicit stack; children are linked in the same
    left-first order a recursive build would produce, which keeps the
    rng consumption sequence (and therefore the tree) reproducible.
    """
    d = x.shape[1]
    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    leaf_frac: list[float] = []

    def new_node(frac: float) -> int:
        feature.append(_NO_FEATURE)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        leaf_frac.append(frac)
        return len(feature) - 1

    root_rows = np.arange(x.shape[0])
    stack: list[tuple[np.ndarray, int, int, int]] = []  # rows, depth, parent, side

    def push(rows: np.ndarray, depth: int, parent: int, side: int) -> None:
        stack.append((rows, depth, parent, side))

    push(root_rows, 0, -1, 0)
    while stack:
        rows, depth, parent, side = stack.pop()
        y_node = y[rows]
        n_node = rows.shape[0]
        pos = int(y_node.sum())
        node = new_node(pos / n_node)
        if parent >= 0:
            if side == 0:
                left[parent] = node
            else:
                right[parent] = node
        if depth >= max_depth or pos == 0 or pos == n_node or n_node < 2 * min_leaf:
            continue

        feats = np.sort(rng.choice(d, size=min(n_subset, d), replace=False))
        x_node = np.ascontiguousarray(x.take(rows, axis=0).take(feats, axis=1))
        local_feat, thr, _gain = best_split(x_node, np.ascontiguousarray(y_node), min_leaf)
        if local_feat < 0:
            continue

        feat = int(feats[local_feat])
        go_left = x_node[:, local_feat] <= thr
        feature[node] = feat
        threshold[node] = thr
        # LIFO: push right first so the left child is grown (and numbered) first
        push(rows[~go_left], depth + 1, node, 1)
        push(rows[go_left], depth + 1, node, 0)

    return {
        "feature": np.array(feature, dtype=np.int64),
        "threshold": np.array(threshold, dtype=np.float64),
        "left": np.array(left, dtype=np.int64),
        "right": np.array(right, dtype=np.int64),
        "leaf_frac": np.array(leaf_frac, dtype=np.float64),
    }


def fit(x: np.ndarray, y: np.ndarray, hp: dict, seed: int) -> dict:
    n_trees = int(hp["trees"])
    max_depth = int(hp["max_depth"])
    min_leaf = int(hp["min_leaf"])
    bootstrap = bool(hp["bootstrap"])
    n, d = x.shape
    n_subset = math.ceil(math.sqrt(d))

    tree_seeds = np.random.SeedSequence(seed).spawn(n_trees)
    trees = []
    for t in range(n_trees):
        rng = np.random.default_rng(tree_seeds[t])
        rows = rng.integers(0, n, size=n) if bootstrap else np.arange(n)
        xt = np.ascontiguousarray(x[rows])
        yt = np.ascontiguousarray(y[rows])
        trees.append(_build_tree(xt, yt, max_depth, min_leaf, n_subset, rng))
    return {"trees": trees, "n_features": d}


def predict(params: dict, x: np.ndarray) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=np.float64)
    votes = np.zeros(x.shape[0], dtype=np.float64)
    for tree in params["trees"]:
        leaves = apply_tree(tree["feature"], tree["threshold"], tree["left"],
                            tree["right"], x)
        votes += (tree["leaf_frac"][leaves] >= 0.5).astype(np.float64)
    return votes / len(params["trees"])
