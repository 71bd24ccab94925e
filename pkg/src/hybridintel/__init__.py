"""Hybrid machine + crowd prediction of early-stage startup funding success.

Five from-scratch machine learners over quantified "hard" signals are
fused with aggregated human Likert judgments (which can also read the
"soft" signals) through performance-weighted ensembling, and everything
is evaluated under stratified 10-fold cross-validation with the Matthews
correlation coefficient and a two-way ANOVA.
"""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
