"""Exact resummation of the Baker-Campbell-Hausdorff series in powers of
x+y, with every coefficient checked against direct log(e^x e^y)."""

from .algebra import (
    UW,
    XY,
    NCPoly,
    Scalar,
    TSeries,
    ad_pow,
    apply_exp_ad_w,
    commutator,
    exp_truncated,
    generators,
    log_truncated,
    substitute,
)
from .diagrams import DiagramDoc, pi_diagrams, tree_to_dot, tree_to_text
from .kernel import KernelTable, bernoulli, k_coeff, kernel_series_check, psi0
from .oracle import ComparisonReport, bch_direct, qseries_to_xy, verify
from .resummation import (
    GradedSeries,
    conjugated_integral,
    eval_tree,
    ode_residual,
    psi_by_descendants,
    psi_by_picard,
    q_series,
    vertex,
    vertex_diagonal,
)
from .trees import Leaf, Node, Tree, descendants, grouped_by_shape, leaf_count, node_count

__version__ = "0.1.0"
