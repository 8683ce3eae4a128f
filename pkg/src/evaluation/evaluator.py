"""
Evaluator for quintic and quartic classifications
"""
from typing import Any, Callable, Dict, List, Optional
import logging
import time

from ..classifier.classifier import classify
from ..classifier.quartic import classify_depressed_quartic
from ..classifier.report import ORACLE_RESOLVED, ClassificationReport, Flag
from ..polynomial.poly_core import DepressedQuartic, MonicQuintic, Poly
from .metrics import Metrics

logger = logging.getLogger(__name__)


class Evaluator:
    """
    Runs one classification at a time and scores it against the Sturm oracle
    and a companion-matrix eigenvalue count
    """

    def __init__(self, eps_tangent: Optional[float] = None, refine_roots: bool = True,
                 companion_check: bool = True):
        """
        Args:
            eps_tangent: absolute tangency threshold override
            refine_roots: refine root values (needed for residuals)
            companion_check: also count real eigenvalues of the companion matrix
        """
        self.eps_tangent = eps_tangent
        self.refine_roots = refine_roots
        self.companion_check = companion_check
        self.metrics = Metrics()

    def _score(self, P: Poly, run: Callable[[], ClassificationReport]) -> Dict[str, Any]:
        start = time.perf_counter()
        report = run()
        elapsed = time.perf_counter() - start

        square_free = Flag.MULTIPLE_ROOT not in report.degenerate
        return {
            "n_real": report.n_real,
            "oracle_n_real": report.oracle_n_real,
            "companion_n_real": self.metrics.calculate_companion_count(P) if self.companion_check else None,
            "agree": report.n_real == report.oracle_n_real
                     and Flag.ORACLE_DISAGREEMENT not in report.degenerate,
            "flagged": bool(set(report.degenerate) & ORACLE_RESOLVED),
            "parity_ok": not square_free or report.n_real % 2 == report.degree % 2,
            "method": report.method.value,
            "scenario": report.scenario,
            "degenerate": [f.value for f in report.degenerate],
            "elapsed": elapsed,
            "residual": self.metrics.calculate_root_residual(P, report.roots),
        }

    def evaluate_single(self, q: MonicQuintic) -> Dict[str, Any]:
        """
        Classify one monic quintic and score it

        Returns:
            Dictionary with counts, agreement, flags, timing and residual
        """
        return self._score(q.to_poly(), lambda: classify(
            q, eps_tangent=self.eps_tangent, refine_roots=self.refine_roots
        ))

    def evaluate_single_quartic(self, dq: DepressedQuartic) -> Dict[str, Any]:
        """Classify one depressed quartic and score it (roots are in t)"""
        return self._score(dq.to_poly(), lambda: classify_depressed_quartic(
            dq, eps_tangent=self.eps_tangent, refine_roots=self.refine_roots
        ))

    def evaluate_system(self, system_name: str, results: List[Dict[str, Any]]) -> Dict[str, Any]:
        """
        Aggregate per-polynomial results

        Args:
            system_name: label of the run
            results: outputs of evaluate_single / evaluate_single_quartic

        Returns:
            Agreement and flag rates, count distribution, timing summary and
            worst residual
        """
        if not results:
            return {}

        evaluation = {
            "system_name": system_name,
            "total": len(results),
            "agreement_rate": self.metrics.calculate_agreement_rate(results),
            "flagged_rate": self.metrics.calculate_flagged_rate(results),
            "companion_agreement_rate": self.metrics.calculate_companion_agreement(results),
            "disagreements": sum(1 for r in results if not r["agree"]),
            "parity_violations": sum(1 for r in results if not r.get("parity_ok", True)),
            "n_real_distribution": self.metrics.calculate_count_distribution(results),
            "flag_counts": self.metrics.calculate_flag_counts(results),
            "timing": self.metrics.calculate_timing_summary([r["elapsed"] for r in results]),
            "max_residual": max(r["residual"] for r in results),
        }
        logger.info("%s: agreement %.6f, flagged %.6f over %d inputs", system_name,
                    evaluation["agreement_rate"], evaluation["flagged_rate"], len(results))
        return evaluation
