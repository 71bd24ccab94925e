"""Two-way ANOVA against independent oracles.

Sums of squares are checked against the classic computing formulas
(raw sums and correction factor), a different arithmetic route than the
implementation's deviation form. P-values are checked against numerical
integration of the F density built from lgamma.
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from hybridintel.errors import ConfigError, DegenerateDesignError
from hybridintel.evaluation.anova import (
    anova_two_way,
    f_survival,
    regularized_incomplete_beta,
)


def anova_oracle(matrix: np.ndarray) -> dict:
    """Textbook computing-formula route: raw sums and correction factor."""
    a, b = matrix.shape
    n = a * b
    total = float(matrix.sum())
    cf = total * total / n
    ss_total = float((matrix ** 2).sum()) - cf
    ss_method = sum(float(matrix[i, :].sum()) ** 2 for i in range(a)) / b - cf
    ss_fold = sum(float(matrix[:, j].sum()) ** 2 for j in range(b)) / a - cf
    ss_error = ss_total - ss_method - ss_fold
    df_method, df_fold, df_error = a - 1, b - 1, (a - 1) * (b - 1)
    ms_method = ss_method / df_method
    ms_error = ss_error / df_error
    return {
        "ss_method": ss_method,
        "ss_fold": ss_fold,
        "ss_error": ss_error,
        "f_method": ms_method / ms_error,
    }


def f_pdf(x: float, d1: float, d2: float) -> float:
    if x <= 0:
        return 0.0
    log_b = math.lgamma(d1 / 2) + math.lgamma(d2 / 2) - math.lgamma((d1 + d2) / 2)
    log_pdf = (d1 / 2) * math.log(d1 / d2) + (d1 / 2 - 1) * math.log(x) \
        - ((d1 + d2) / 2) * math.log(1 + d1 * x / d2) - log_b
    return math.exp(log_pdf)


def f_sf_by_integration(f_value: float, d1: float, d2: float) -> float:
    tail, _ = quad(f_pdf, f_value, np.inf, args=(d1, d2), limit=400)
    return tail


class TestSumsOfSquares:
    def test_textbook_randomized_block(self):
        """4 treatments x 5 blocks; values frozen from the oracle."""
        matrix = np.array([
            [73.0, 68.0, 74.0, 71.0, 67.0],
            [73.0, 67.0, 75.0, 72.0, 70.0],
            [75.0, 68.0, 78.0, 73.0, 68.0],
            [73.0, 71.0, 75.0, 75.0, 69.0],
        ])
        table = anova_two_way(matrix)
        oracle = anova_oracle(matrix)
        assert abs(table.ss_method - oracle["ss_method"]) < 1e-9
        assert abs(table.ss_fold - oracle["ss_fold"]) < 1e-9
        assert abs(table.ss_error - oracle["ss_error"]) < 1e-9
        assert abs(table.f_method - oracle["f_method"]) < 1e-9
        # frozen oracle values for this instance
        assert abs(table.ss_method - 12.95) < 1e-9
        assert abs(table.ss_fold - 157.0) < 1e-9
        assert abs(table.ss_error - 21.80) < 1e-9
        assert abs(table.f_method - 2.3761467889899746) < 1e-9

    def test_random_matrices_match_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            a = int(rng.integers(2, 12))
            b = int(rng.integers(2, 12))
            matrix = rng.normal(size=(a, b)) * rng.uniform(0.1, 5)
            table = anova_two_way(matrix)
            oracle = anova_oracle(matrix)
            assert abs(table.ss_method - oracle["ss_method"]) < 1e-9
            assert abs(table.ss_fold - oracle["ss_fold"]) < 1e-9
            assert abs(table.ss_error - oracle["ss_error"]) < 1e-9
            assert abs(table.f_method - oracle["f_method"]) < 1e-9

    def test_partition_identity(self):
        rng = np.random.default_rng(7)
        matrix = rng.normal(size=(6, 9))
        table = anova_two_way(matrix)
        assert abs(table.ss_total
                   - (table.ss_method + table.ss_fold + table.ss_error)) < 1e-9


class TestDegenerateDesigns:
    def test_identical_methods_zero_f(self):
        """Rows identical: no method variance, F_method = 0 by convention."""
        row = np.array([0.4, 0.6, 0.5, 0.7])
        table = anova_two_way(np.vstack([row, row, row]))
        assert table.ss_method == 0.0
        assert table.f_method == 0.0
        assert table.p_method == 1.0

    def test_constant_offset_is_degenerate(self):
        """Two methods differing by exactly +0.1 everywhere: SS_error = 0."""
        base = np.array([0.40, 0.55, 0.45, 0.60, 0.50])
        with pytest.raises(DegenerateDesignError):
            anova_two_way(np.vstack([base, base + 0.1]))

    def test_shape_requirements(self):
        with pytest.raises(ConfigError):
            anova_two_way(np.zeros((1, 5)))
        with pytest.raises(ConfigError):
            anova_two_way(np.zeros((5, 1)))
        with pytest.raises(ConfigError):
            anova_two_way(np.zeros(5))


class TestPValues:
    def test_survival_matches_integration(self):
        rng = np.random.default_rng(11)
        for _ in range(30):
            d1 = float(rng.integers(1, 15))
            d2 = float(rng.integers(2, 60))
            f_value = float(rng.uniform(0.05, 8.0))
            mine = f_survival(f_value, d1, d2)
            oracle = f_sf_by_integration(f_value, d1, d2)
            assert abs(mine - oracle) < 1e-8

    def test_table_pvalue_matches_integration(self):
        rng = np.random.default_rng(3)
        matrix = rng.normal(size=(5, 8)) + rng.normal(size=(5, 1)) * 0.5
        table = anova_two_way(matrix)
        oracle = f_sf_by_integration(table.f_method, table.df_method, table.df_error)
        assert abs(table.p_method - oracle) < 1e-6

    def test_survival_boundaries(self):
        assert f_survival(0.0, 3, 10) == 1.0
        assert f_survival(-1.0, 3, 10) == 1.0
        assert f_survival(1e9, 3, 10) < 1e-8

    def test_incomplete_beta_sanity(self):
        assert regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0
        assert regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0
        # I_x(1,1) is the identity
        for x in (0.1, 0.5, 0.9):
            assert abs(regularized_incomplete_beta(1.0, 1.0, x) - x) < 1e-12
        # symmetry: I_x(a,b) = 1 - I_{1-x}(b,a)
        rng = np.random.default_rng(5)
        for _ in range(50):
            a, b = float(rng.uniform(0.5, 20)), float(rng.uniform(0.5, 20))
            x = float(rng.uniform(0.001, 0.999))
            lhs = regularized_incomplete_beta(a, b, x)
            rhs = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x)
            assert abs(lhs - rhs) < 1e-10
