"""
Trigonometric reduction and critical-point analysis
"""
from .reduction import (
    TrigReduction, reduce, eval_f, sample_f, f_prime, boundary_values,
    chebyshev_T5, chebyshev_U4,
)
from .critical import CriticalSet, critical_g, solve_critical

__all__ = [
    "TrigReduction", "reduce", "eval_f", "sample_f", "f_prime", "boundary_values",
    "chebyshev_T5", "chebyshev_U4",
    "CriticalSet", "critical_g", "solve_critical",
]
