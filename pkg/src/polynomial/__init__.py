"""
Polynomial core and Sturm-sequence oracle
"""
from .poly_core import (
    Poly, MonicQuintic, DepressedQuintic, DepressedQuartic,
    depress, depress_quartic, eval_poly, derivative,
)
from .oracle import (
    SturmChain, OracleReport, build_chain, count_roots, cauchy_bound,
    isolate_and_refine, count_distinct, companion_count, analyze,
)

__all__ = [
    "Poly", "MonicQuintic", "DepressedQuintic", "DepressedQuartic",
    "depress", "depress_quartic", "eval_poly", "derivative",
    "SturmChain", "OracleReport", "build_chain", "count_roots", "cauchy_bound",
    "isolate_and_refine", "count_distinct", "companion_count", "analyze",
]
