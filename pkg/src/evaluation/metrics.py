"""
Evaluation metrics for classifier concordance runs
"""
from typing import Any, Dict, List, Sequence

import numpy as np

from ..polynomial.oracle import companion_count
from ..polynomial.poly_core import Poly, eval_poly


class Metrics:
    """
    Metrics for comparing the trigonometric classification against the
    Sturm oracle and an eigenvalue cross-check
    """

    @staticmethod
    def calculate_agreement_rate(results: List[Dict[str, Any]]) -> float:
        """
        Fraction of non-flagged results whose count matches the oracle

        Args:
            results: per-polynomial results from Evaluator.evaluate_single

        Returns:
            Agreement rate (0-1); 1.0 when every result was flagged
        """
        clean = [r for r in results if not r.get("flagged", False)]
        if not clean:
            return 1.0
        return sum(1 for r in clean if r.get("agree", False)) / len(clean)

    @staticmethod
    def calculate_flagged_rate(results: List[Dict[str, Any]]) -> float:
        """Fraction of results carrying a degeneracy flag that routes them to the oracle"""
        if not results:
            return 0.0
        return sum(1 for r in results if r.get("flagged", False)) / len(results)

    @staticmethod
    def calculate_companion_agreement(results: List[Dict[str, Any]]) -> float:
        """Fraction of results whose count matches the companion-matrix count"""
        checked = [r for r in results if r.get("companion_n_real") is not None]
        if not checked:
            return 1.0
        return sum(1 for r in checked if r["companion_n_real"] == r["n_real"]) / len(checked)

    @staticmethod
    def calculate_timing_summary(times: Sequence[float]) -> Dict[str, float]:
        """
        Timing statistics in seconds

        Args:
            times: per-call elapsed times

        Returns:
            Dictionary with mean, std, min, max, median, p95, p99 and total
        """
        if len(times) == 0:
            return {key: 0.0 for key in ("mean", "std", "min", "max", "median", "p95", "p99", "total")}
        values = np.asarray(times, dtype=float)
        return {
            "mean": float(np.mean(values)),
            "std": float(np.std(values)),
            "min": float(np.min(values)),
            "max": float(np.max(values)),
            "median": float(np.median(values)),
            "p95": float(np.percentile(values, 95)),
            "p99": float(np.percentile(values, 99)),
            "total": float(np.sum(values)),
        }

    @staticmethod
    def calculate_root_residual(P: Poly, roots: Sequence[float]) -> float:
        """
        Largest scaled residual |P(z)| / ((1 + max|a_i|) * max(1, |z|^deg)) over
        the given roots of a monic P
        """
        if not roots:
            return 0.0
        coefficient_scale = 1.0 + max(abs(c) for c in P.coeffs[:-1]) if P.degree > 0 else 1.0
        return max(
            abs(eval_poly(P, z)) / (coefficient_scale * max(1.0, abs(z) ** P.degree))
            for z in roots
        )

    @staticmethod
    def calculate_companion_count(P: Poly, tolerance: float = 1e-7) -> int:
        """Distinct real eigenvalues of the companion matrix of P"""
        return companion_count(P, tolerance)

    @staticmethod
    def calculate_count_distribution(results: List[Dict[str, Any]]) -> Dict[int, int]:
        """Histogram of n_real values"""
        counts: Dict[int, int] = {}
        for r in results:
            counts[r["n_real"]] = counts.get(r["n_real"], 0) + 1
        return dict(sorted(counts.items()))

    @staticmethod
    def calculate_flag_counts(results: List[Dict[str, Any]]) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for r in results:
            for flag in r.get("degenerate", []):
                counts[flag] = counts.get(flag, 0) + 1
        return dict(sorted(counts.items()))
