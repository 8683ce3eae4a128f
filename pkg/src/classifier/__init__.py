"""
Quintic classifier and its quartic analogue
"""
from .report import (
    ClassificationReport, ExteriorCount, Flag, InteriorCount, Method, SweepRow,
)
from .classifier import (
    classify, classify_parameters, count_exterior, count_interior,
    refine_interior_root, scenario_label,
)
from .quartic import (
    QuarticReduction, classify_general_quartic, classify_quartic, reduce_quartic,
)

__all__ = [
    "ClassificationReport", "ExteriorCount", "Flag", "InteriorCount", "Method", "SweepRow",
    "classify", "classify_parameters", "count_exterior", "count_interior",
    "refine_interior_root", "scenario_label",
    "QuarticReduction", "classify_general_quartic", "classify_quartic", "reduce_quartic",
]
