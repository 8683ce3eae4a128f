"""
Trigonometric reduction of a depressed quintic.

With m < 0 and u = 2 sqrt(-m/5), substituting t = u cos(theta) and dividing by
u^5/16 matches the Chebyshev identity T5(cos theta) = cos 5 theta and leaves

    f(theta) = alpha cos^2 theta + beta cos theta + cos 5 theta + gamma

with f(theta) = (16 / u^5) P(u cos theta).
"""
from math import cos, sin, sqrt
from typing import Optional, Tuple
import logging

import numpy as np
from numpy.polynomial import chebyshev
from pydantic import BaseModel, ConfigDict

from ..exceptions import MethodNotApplicable
from ..polynomial.poly_core import DepressedQuintic, Poly, eval_poly

logger = logging.getLogger(__name__)

# Chebyshev-series coefficients: T5 = T_5, U4 = 2 T4 + 2 T2 + T0
_T5_SERIES = (0.0, 0.0, 0.0, 0.0, 0.0, 1.0)
_U4_SERIES = (1.0, 0.0, 2.0, 0.0, 2.0)


class TrigReduction(BaseModel):
    """Scale u and trigonometric parameters (alpha, beta, gamma)"""

    model_config = ConfigDict(frozen=True)

    u: float
    alpha: float
    beta: float
    gamma: float
    source: Optional[DepressedQuintic] = None

    @classmethod
    def from_parameters(cls, alpha: float, beta: float, gamma: float) -> "TrigReduction":
        """Parameter-space reduction with no source quintic (u fixed at 1)"""
        return cls(u=1.0, alpha=alpha, beta=beta, gamma=gamma)

    def f(self, theta: float) -> float:
        return eval_f(self, theta)

    def f_prime(self, theta: float) -> float:
        return f_prime(self, theta)

    def boundary_values(self) -> Tuple[float, float]:
        return boundary_values(self)

    def critical_poly(self) -> Poly:
        """g(x) = 80x^4 - 60x^2 + 2 alpha x + (beta + 5)"""
        return Poly(coeffs=(self.beta + 5.0, 2.0 * self.alpha, -60.0, 0.0, 80.0))

    def scale(self) -> float:
        return 1.0 + abs(self.alpha) + abs(self.beta) + abs(self.gamma)

    def parameters(self) -> Tuple[float, float, float]:
        return self.alpha, self.beta, self.gamma


def reduce(dq: DepressedQuintic) -> TrigReduction:
    """
    Compute u and (alpha, beta, gamma) for a depressed quintic.

    Raises:
        MethodNotApplicable: m >= 0, the cosine substitution does not exist
    """
    m = dq.m
    if not m < 0.0:
        raise MethodNotApplicable(
            f"trigonometric reduction needs m < 0, got m = {m!r}", m=m
        )
    u = 2.0 * sqrt(-m / 5.0)
    u3 = u * u * u
    u4 = u3 * u
    u5 = u4 * u
    alpha = 16.0 * dq.n / u3
    beta = 16.0 * dq.p / u4 - 5.0
    gamma = 16.0 * dq.q / u5
    logger.debug("Reduced: u=%r alpha=%r beta=%r gamma=%r", u, alpha, beta, gamma)
    return TrigReduction(u=u, alpha=alpha, beta=beta, gamma=gamma, source=dq)


def eval_f(r: TrigReduction, theta: float) -> float:
    """alpha cos^2 + beta cos + cos 5 theta + gamma (cos 5 theta taken directly)"""
    c = cos(theta)
    return r.alpha * c * c + r.beta * c + cos(5.0 * theta) + r.gamma


def sample_f(r: TrigReduction, thetas: np.ndarray) -> np.ndarray:
    """Vectorized f over an array of angles"""
    c = np.cos(thetas)
    return r.alpha * c * c + r.beta * c + np.cos(5.0 * thetas) + r.gamma


def f_prime(r: TrigReduction, theta: float) -> float:
    """f'(theta) = -2 alpha cos sin - beta sin - 5 sin 5 theta"""
    s, c = sin(theta), cos(theta)
    return -2.0 * r.alpha * c * s - r.beta * s - 5.0 * sin(5.0 * theta)


def boundary_values(r: TrigReduction) -> Tuple[float, float]:
    """(f(0), f(pi)) = (alpha + beta + 1 + gamma, alpha - beta - 1 + gamma)"""
    f0 = r.alpha + r.beta + 1.0 + r.gamma
    fpi = r.alpha - r.beta - 1.0 + r.gamma
    return f0, fpi


def bridge_value(r: TrigReduction, theta: float) -> float:
    """(16 / u^5) P(u cos theta), which equals f(theta) by construction"""
    if r.source is None:
        raise ValueError("bridge_value needs a reduction built from a quintic")
    return 16.0 / r.u ** 5 * eval_poly(r.source.to_poly(), r.u * cos(theta))


def amplitude_bound(r: TrigReduction) -> float:
    """|f(theta) - gamma| never exceeds |alpha| + |beta| + 1"""
    return abs(r.alpha) + abs(r.beta) + 1.0


def chebyshev_T5(x: float) -> float:
    """T5(x) = 16x^5 - 20x^3 + 5x"""
    return float(chebyshev.chebval(x, _T5_SERIES))


def chebyshev_U4(x: float) -> float:
    """U4(x) = 16x^4 - 12x^2 + 1, so that sin 5 theta = sin theta U4(cos theta)"""
    return float(chebyshev.chebval(x, _U4_SERIES))
