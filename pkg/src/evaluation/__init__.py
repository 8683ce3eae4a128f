"""
Evaluation framework: oracle concordance, identity checks and plots
"""
from .evaluator import Evaluator
from .metrics import Metrics
from .experiments import (
    ExperimentRunner, GOLDEN_EXAMPLES, generate_random_quartics, generate_random_quintics,
)
from .visualization import ResultsVisualizer

__all__ = [
    "Evaluator", "Metrics", "ExperimentRunner", "ResultsVisualizer", "GOLDEN_EXAMPLES",
    "generate_random_quartics", "generate_random_quintics",
]
