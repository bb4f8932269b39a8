"""EVD, real canonical form and symplectic SVD of skew-symmetric matrices."""

from .skew import (
    SvdGauge,
    degenerate_clusters,
    gram_sqrt,
    real_canonical_form,
    require_skew,
    skew_evd,
    skew_spectrum,
    skew_svd,
)
from .relation import evd_svd_relation, pair_coefficients

__all__ = [
    "SvdGauge",
    "degenerate_clusters",
    "gram_sqrt",
    "real_canonical_form",
    "require_skew",
    "skew_evd",
    "skew_spectrum",
    "skew_svd",
    "evd_svd_relation",
    "pair_coefficients",
]
