"""
Experiment Runner: oracle concordance, bridge identities and golden examples
"""
from typing import Any, Dict, List, Optional
from pathlib import Path
import json
import logging

import numpy as np
from tqdm import tqdm

from .. import config
from ..classifier.classifier import classify
from ..classifier.quartic import (
    QuarticReduction, eval_f4, quartic_bridge_value, reduce_quartic,
)
from ..polynomial.poly_core import (
    DepressedQuartic, MonicQuintic, depress, depress_quartic,
)
from ..trig.reduction import (
    bridge_value, chebyshev_T5, chebyshev_U4, eval_f, amplitude_bound, reduce,
)
from .evaluator import Evaluator

logger = logging.getLogger(__name__)

# Worked examples with known answers (descending coefficients)
GOLDEN_EXAMPLES = [
    {
        "name": "all five real",
        "coefficients": [1.0, 0.0, -5.0, 0.0, 5.0, 0.0],
        "n_real": 5,
        "scenario": "Thm1",
        "roots": [-1.902113032590307, -1.1755705045849463, 0.0,
                  1.1755705045849463, 1.902113032590307],
        "tolerance": 1e-9,
    },
    {
        "name": "three real, one interior",
        "coefficients": [1.0, 0.0, -5.0, 0.0, 1.0, -5.0],
        "n_real": 3,
        "scenario": "Thm2(b)",
        "roots": [-2.043, -1.205, 2.286],
        "tolerance": 1e-3,
    },
    {
        "name": "one real, exterior left",
        "coefficients": [1.0, 0.0, -5.0, 1.0, 2.0, 5.0],
        "n_real": 1,
        "scenario": "Thm3(b)",
        "roots": [-2.335],
        "tolerance": 1e-3,
    },
]


def generate_random_quintics(n: int, seed: Optional[int] = None,
                             coefficient_range: Optional[float] = None) -> List[MonicQuintic]:
    """
    Monic quintics with a4..a0 uniform in [-R, R], resampled until the
    depressed m is negative
    """
    seed = config.CONCORDANCE_SEED if seed is None else seed
    R = config.COEFFICIENT_RANGE if coefficient_range is None else coefficient_range
    rng = np.random.default_rng(seed)
    quintics: List[MonicQuintic] = []
    while len(quintics) < n:
        a4, a3, a2, a1, a0 = rng.uniform(-R, R, size=5)
        q = MonicQuintic(a4=a4, a3=a3, a2=a2, a1=a1, a0=a0)
        if depress(q).m < 0.0:
            quintics.append(q)
    return quintics


def generate_random_quartics(n: int, seed: Optional[int] = None,
                             coefficient_range: Optional[float] = None) -> List[DepressedQuartic]:
    """Depressed monic quartics from a3..a0 uniform in [-R, R], kept when m < 0"""
    seed = config.CONCORDANCE_SEED if seed is None else seed
    R = config.COEFFICIENT_RANGE if coefficient_range is None else coefficient_range
    rng = np.random.default_rng(seed)
    quartics: List[DepressedQuartic] = []
    while len(quartics) < n:
        a3, a2, a1, a0 = rng.uniform(-R, R, size=4)
        dq = depress_quartic(a3, a2, a1, a0)
        if dq.m < 0.0:
            quartics.append(DepressedQuartic(m=dq.m, p=dq.p, q=dq.q))
    return quartics


class ExperimentRunner:
    """
    Batch experiments over seeded random polynomials:
    1. Quintic concordance with the Sturm oracle
    2. Quartic concordance with the Sturm oracle
    3. Bridge identity residuals on theta grids
    4. Golden examples
    """

    def __init__(self, samples: Optional[int] = None, seed: Optional[int] = None,
                 coefficient_range: Optional[float] = None, refine_roots: bool = False,
                 show_progress: bool = True):
        """
        Args:
            samples: polynomials per concordance run
            seed: seed for numpy's default_rng
            coefficient_range: R in the uniform [-R, R] coefficient draw
            refine_roots: refine root values during concordance (slower)
            show_progress: tqdm progress bars
        """
        self.samples = config.CONCORDANCE_SAMPLES if samples is None else samples
        self.seed = config.CONCORDANCE_SEED if seed is None else seed
        self.coefficient_range = (config.COEFFICIENT_RANGE if coefficient_range is None
                                  else coefficient_range)
        self.evaluator = Evaluator(refine_roots=refine_roots)
        self.show_progress = show_progress
        self.results: Dict[str, Any] = {}

    def run_quintic_concordance(self, system_name: str = "quintic concordance") -> Dict[str, Any]:
        """Classify `samples` random quintics and aggregate oracle agreement"""
        logger.info("Running %s on %d quintics (seed %d)", system_name, self.samples, self.seed)
        quintics = generate_random_quintics(self.samples, self.seed, self.coefficient_range)
        results = [
            self.evaluator.evaluate_single(q)
            for q in tqdm(quintics, desc=system_name, disable=not self.show_progress)
        ]
        evaluation = self.evaluator.evaluate_system(system_name, results)
        self.results[system_name] = {"evaluation": evaluation, "detailed_results": results}
        return evaluation

    def run_quartic_concordance(self, system_name: str = "quartic concordance") -> Dict[str, Any]:
        """Same as run_quintic_concordance for depressed quartics"""
        logger.info("Running %s on %d quartics (seed %d)", system_name, self.samples, self.seed)
        quartics = generate_random_quartics(self.samples, self.seed, self.coefficient_range)
        results = [
            self.evaluator.evaluate_single_quartic(dq)
            for dq in tqdm(quartics, desc=system_name, disable=not self.show_progress)
        ]
        evaluation = self.evaluator.evaluate_system(system_name, results)
        evaluation["odd_counts"] = sum(
            1 for r in results if r["n_real"] % 2 and "MultipleRoot" not in r["degenerate"]
        )
        self.results[system_name] = {"evaluation": evaluation, "detailed_results": results}
        return evaluation

    def run_bridge_identity_suite(self, polynomials: int = 100, grid: int = 1000) -> Dict[str, Any]:
        """
        Worst residuals of the substitution identities on uniform theta grids.

        Bridge residuals are relative to the parameter scale 1 + sum of |params|.

        Returns:
            quintic_bridge, quartic_bridge, chebyshev_T5, chebyshev_U4 and
            amplitude_excess (how far |f - gamma| ever exceeds |alpha| + |beta| + 1)
        """
        thetas = np.linspace(0.0, np.pi, grid)
        xs = np.cos(thetas)
        quintic_bridge = quartic_bridge = amplitude_excess = 0.0

        for q in generate_random_quintics(polynomials, self.seed + 1, self.coefficient_range):
            r = reduce(depress(q))
            bound = amplitude_bound(r)
            scale = r.scale()
            for theta in thetas:
                f = eval_f(r, theta)
                quintic_bridge = max(quintic_bridge, abs(f - bridge_value(r, theta)) / scale)
                amplitude_excess = max(amplitude_excess, abs(f - r.gamma) - bound)

        for dq in generate_random_quartics(polynomials, self.seed + 2, self.coefficient_range):
            r4: QuarticReduction = reduce_quartic(dq.m, dq.p, dq.q)
            for theta in thetas:
                quartic_bridge = max(quartic_bridge,
                                     abs(eval_f4(r4, theta) - quartic_bridge_value(r4, theta)) / r4.scale())

        t5 = max(abs(chebyshev_T5(x) - np.cos(5.0 * th)) for x, th in zip(xs, thetas))
        u4 = max(abs(np.sin(th) * chebyshev_U4(x) - np.sin(5.0 * th)) for x, th in zip(xs, thetas))

        summary = {
            "quintic_bridge": quintic_bridge,
            "quartic_bridge": quartic_bridge,
            "chebyshev_T5": float(t5),
            "chebyshev_U4": float(u4),
            "amplitude_excess": amplitude_excess,
        }
        self.results["bridge identities"] = {"evaluation": summary}
        return summary

    def run_golden_examples(self) -> List[Dict[str, Any]]:
        """Classify each golden example and compare counts, scenario and roots"""
        outcomes = []
        for example in GOLDEN_EXAMPLES:
            report = classify(MonicQuintic.from_coefficients(example["coefficients"]))
            root_error = max(
                (abs(a - b) for a, b in zip(report.roots, example["roots"])),
                default=0.0,
            ) if len(report.roots) == len(example["roots"]) else float("inf")
            passed = (report.n_real == example["n_real"]
                      and report.scenario == example["scenario"]
                      and root_error <= example["tolerance"])
            outcomes.append({
                "name": example["name"],
                "passed": passed,
                "n_real": report.n_real,
                "scenario": report.scenario,
                "root_error": root_error,
            })
            if not passed:
                logger.warning("Golden example %r failed: %s", example["name"], outcomes[-1])
        self.results["golden examples"] = {"evaluation": outcomes}
        return outcomes

    def run_all(self) -> Dict[str, Any]:
        """Run every experiment and return the collected evaluations"""
        return {
            "golden_examples": self.run_golden_examples(),
            "bridge_identities": self.run_bridge_identity_suite(),
            "quintic_concordance": self.run_quintic_concordance(),
            "quartic_concordance": self.run_quartic_concordance(),
        }

    def save_results(self, output_path: Path, include_details: bool = False) -> Path:
        """Save experiment results to a JSON file"""
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            name: (data if include_details else {"evaluation": data["evaluation"]})
            for name, data in self.results.items()
        }
        with open(output_path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, default=str)
        logger.info("Results saved to %s", output_path)
        return output_path

