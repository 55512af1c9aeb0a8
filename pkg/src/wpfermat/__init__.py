"""Exact computations for Fermat-type curves x0^amn + x1^an = x2^am on P(1,m,n)."""
from .cover import Weights, normalize_weights
from .curve import chart_polynomial, smoothness_certificate, verify_chart_recursion
from .elimination import singular_locus_empty
from .genus import full_report, genus_hurwitz
from .hj import hj_resolve
from .laurent import LaurentPoly2

__all__ = [
    "LaurentPoly2",
    "Weights",
    "chart_polynomial",
    "full_report",
    "genus_hurwitz",
    "hj_resolve",
    "normalize_weights",
    "singular_locus_empty",
    "smoothness_certificate",
    "verify_chart_recursion",
]
