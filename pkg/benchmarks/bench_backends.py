"""Benchmark the compiled kernel backend against the pure-python fallback.

The hot path is random-forest training (per-node Gini split search) and
prediction (tree traversal); both backends produce bit-identical trees,
so this measures speed only.

Run:  python3 benchmarks/bench_backends.py [--rows 900] [--cols 66] [--trees 50]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hybridintel._kernels import _pyref

try:
    from hybridintel._kernels import _core
except ImportError:
    _core = None

from hybridintel.learners import forest


def time_backend(impl, x, y, hp, repeats: int) -> tuple[float, float]:
    forest.best_split = impl.best_split
    forest.apply_tree = impl.apply_tree
    fit_times = []
    predict_times = []
    params = None
    for _ in range(repeats):
        start = time.perf_counter()
        params = forest.fit(x, y, hp, seed=12)
        fit_times.append(time.perf_counter() - start)
        start = time.perf_counter()
        forest.predict(params, x)
        predict_times.append(time.perf_counter() - start)
    return min(fit_times), min(predict_times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=900)
    parser.add_argument("--cols", type=int, default=66)
    parser.add_argument("--trees", type=int, default=50)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    x = np.ascontiguousarray(rng.normal(size=(args.rows, args.cols)))
    y = (x @ rng.normal(size=args.cols) + rng.normal(size=args.rows) > 0).astype(np.int64)
    hp = {"trees": args.trees, "max_depth": 12, "min_leaf": 2, "bootstrap": True}

    print(f"forest: {args.trees} trees on {args.rows} x {args.cols} "
          f"(best of {args.repeats})\n")
    print(f"{'backend':<14} {'fit':>10} {'predict':>10}")
    print("-" * 36)

    fit_py, pred_py = time_backend(_pyref, x, y, hp, args.repeats)
    print(f"{'pure-python':<14} {fit_py:>9.3f}s {pred_py:>9.4f}s")

    if _core is None:
        print(f"{'compiled':<14} {'not built':>10}")
        return
    fit_c, pred_c = time_backend(_core, x, y, hp, args.repeats)
    print(f"{'compiled':<14} {fit_c:>9.3f}s {pred_c:>9.4f}s")
    print(f"\nspeedup: fit x{fit_py / fit_c:.1f}, predict x{pred_py / pred_c:.1f}")


if __name__ == "__main__":
    main()
