"""
Visualization for the reduced equation and experiment results
"""
from typing import Any, Dict, Optional, Tuple
from pathlib import Path
import logging

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .. import config
from ..classifier.classifier import classify_parameters
from ..trig.reduction import TrigReduction, sample_f

logger = logging.getLogger(__name__)


class ResultsVisualizer:
    """
    Plots of f(theta), parameter-space strata and concordance summaries
    """

    def __init__(self, output_dir: Path = None):
        """
        Args:
            output_dir: directory plots are written to
        """
        self.output_dir = Path(output_dir or config.EVALUATION_PLOTS_DIR)

    def _save(self, fig, output_path: Path) -> Path:
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        fig.tight_layout()
        fig.savefig(output_path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        logger.info("Plot saved to %s", output_path)
        return output_path

    def plot_f(self, reduction: TrigReduction, output_path: Path = None,
               samples: Optional[int] = None) -> Path:
        """
        f(theta) on [0, pi] with its zero line

        Args:
            reduction: parameters of f
            output_path: target file (default: <output_dir>/f_theta.png)
            samples: number of theta samples
        """
        samples = samples or config.THETA_SAMPLES
        thetas = np.linspace(0.0, np.pi, samples)
        values = sample_f(reduction, thetas)

        fig, ax = plt.subplots(figsize=(10, 5))
        ax.plot(thetas, values, color="#45B7D1", linewidth=1.5)
        ax.axhline(0.0, color="black", linewidth=0.8)
        ax.set_xlabel("theta", fontsize=12)
        ax.set_ylabel("f(theta)", fontsize=12)
        ax.set_title(
            f"alpha={reduction.alpha:.4g}, beta={reduction.beta:.4g}, gamma={reduction.gamma:.4g}",
            fontsize=13, fontweight="bold",
        )
        ax.set_xlim(0.0, np.pi)
        ax.grid(alpha=0.3)
        return self._save(fig, output_path or self.output_dir / "f_theta.png")

    def plot_sweep_strata(self, alpha: float, beta_range: Tuple[float, float],
                          gamma_range: Tuple[float, float], output_path: Path = None,
                          steps: int = 81) -> Path:
        """
        Heat-map of the interior zero count over the (beta, gamma) plane at fixed
        alpha
        """
        betas = np.linspace(beta_range[0], beta_range[1], steps)
        gammas = np.linspace(gamma_range[0], gamma_range[1], steps)
        grid = np.array([
            [classify_parameters(alpha, beta, gamma).n_int for beta in betas]
            for gamma in gammas
        ])

        fig, ax = plt.subplots(figsize=(8, 7))
        image = ax.imshow(
            grid, origin="lower", aspect="auto", cmap="viridis", vmin=0, vmax=5,
            extent=(betas[0], betas[-1], gammas[0], gammas[-1]),
        )
        fig.colorbar(image, ax=ax, label="interior zeros")
        ax.set_xlabel("beta", fontsize=12)
        ax.set_ylabel("gamma", fontsize=12)
        ax.set_title(f"Interior zero strata at alpha={alpha:.4g}", fontsize=13, fontweight="bold")
        return self._save(fig, output_path or self.output_dir / "sweep_strata.png")

    def plot_concordance(self, evaluation: Dict[str, Any], output_path: Path = None) -> Path:
        """
        Bar charts of the n_real distribution and the degeneracy flag counts of
        one concordance run
        """
        distribution = evaluation.get("n_real_distribution", {})
        flags = evaluation.get("flag_counts", {})
        if not distribution:
            logger.warning("No concordance results to plot")

        fig, (left, right) = plt.subplots(1, 2, figsize=(14, 6))
        counts = [str(k) for k in distribution]
        bars = left.bar(counts, list(distribution.values()), color="#4ECDC4")
        for bar, value in zip(bars, distribution.values()):
            left.text(bar.get_x() + bar.get_width() / 2, bar.get_height(), str(value),
                      ha="center", va="bottom", fontweight="bold")
        left.set_xlabel("distinct real roots", fontsize=12)
        left.set_ylabel("polynomials", fontsize=12)
        left.set_title(evaluation.get("system_name", "concordance"), fontsize=13, fontweight="bold")
        left.grid(axis="y", alpha=0.3)

        right.bar(list(flags.keys()), list(flags.values()), color="#FF6B6B")
        right.set_ylabel("occurrences", fontsize=12)
        right.set_title(
            f"flags (agreement {evaluation.get('agreement_rate', 0.0):.4f}, "
            f"flagged {evaluation.get('flagged_rate', 0.0):.4f})",
            fontsize=13, fontweight="bold",
        )
        right.tick_params(axis="x", rotation=20)
        right.grid(axis="y", alpha=0.3)
        return self._save(fig, output_path or self.output_dir / "concordance.png")
