"""
Quartic analogue of the trigonometric reduction.

For a depressed quartic t^4 + m t^2 + p t + q with m < 0, t = u cos(theta) with
u = sqrt(-m) and the identity 8cos^4 - 8cos^2 + 1 = cos 4 theta give

    f4(theta) = a cos theta + cos 4 theta + b = (8 / u^4) P4(u cos theta),

a = 8p/u^3, b = 8q/u^4 - 1. Counts are 0, 2 or 4 distinct real roots for
square-free input.
"""
from math import cos, sin, sqrt
from typing import List, Optional, Tuple
import logging

import numpy as np
from numpy.polynomial import chebyshev
from pydantic import BaseModel, ConfigDict

from ..exceptions import InvalidInput, MethodNotApplicable
from ..polynomial.poly_core import (
    DepressedQuartic, Poly, depress_quartic, eval_poly, require_finite,
)
from ..trig.critical import CriticalSet, build_critical_set, critical_roots_in_unit_interval
from .classifier import run_pipeline
from .report import ClassificationReport

logger = logging.getLogger(__name__)

# U3 = 2 T3 + 2 T1, so that sin 4 theta = sin theta U3(cos theta)
_U3_SERIES = (0.0, 2.0, 0.0, 2.0)


class QuarticReduction(BaseModel):
    """Scale u and parameters (a, b) of f4"""

    model_config = ConfigDict(frozen=True)

    u: float
    a: float
    b: float
    source: Optional[DepressedQuartic] = None

    def f(self, theta: float) -> float:
        return eval_f4(self, theta)

    def f_prime(self, theta: float) -> float:
        return f4_prime(self, theta)

    def boundary_values(self) -> Tuple[float, float]:
        """(f4(0), f4(pi)) = (a + 1 + b, -a + 1 + b)"""
        return self.a + 1.0 + self.b, -self.a + 1.0 + self.b

    def critical_poly(self) -> Poly:
        """32x^3 - 16x + a"""
        return Poly(coeffs=(self.a, -16.0, 0.0, 32.0))

    def scale(self) -> float:
        return 1.0 + abs(self.a) + abs(self.b)

    def parameters(self) -> Tuple[float, Optional[float], float]:
        # Reported as (alpha, beta, gamma); the quartic has no beta
        return self.a, None, self.b


def reduce_quartic(m: float, p: float, q: float,
                   source: Optional[DepressedQuartic] = None) -> QuarticReduction:
    """
    Compute u and (a, b) for t^4 + m t^2 + p t + q.

    Raises:
        MethodNotApplicable: m >= 0
    """
    if not m < 0.0:
        raise MethodNotApplicable(
            f"quartic reduction needs m < 0, got m = {m!r}", m=m
        )
    source = source or DepressedQuartic(m=m, p=p, q=q)
    u = sqrt(-m)
    u3 = u * u * u
    a = 8.0 * p / u3
    b = 8.0 * q / (u3 * u) - 1.0
    logger.debug("Quartic reduced: u=%r a=%r b=%r", u, a, b)
    return QuarticReduction(u=u, a=a, b=b, source=source)


def eval_f4(r: QuarticReduction, theta: float) -> float:
    return r.a * cos(theta) + cos(4.0 * theta) + r.b


def sample_f4(r: QuarticReduction, thetas: np.ndarray) -> np.ndarray:
    return r.a * np.cos(thetas) + np.cos(4.0 * thetas) + r.b


def f4_prime(r: QuarticReduction, theta: float) -> float:
    """-a sin theta - 4 sin 4 theta = -sin theta (32x^3 - 16x + a), x = cos theta"""
    return -r.a * sin(theta) - 4.0 * sin(4.0 * theta)


def chebyshev_U3(x: float) -> float:
    """U3(x) = 8x^3 - 4x"""
    return float(chebyshev.chebval(x, _U3_SERIES))


def quartic_bridge_value(r: QuarticReduction, theta: float) -> float:
    """(8 / u^4) P4(u cos theta)"""
    if r.source is None:
        raise ValueError("quartic_bridge_value needs a reduction built from a quartic")
    return 8.0 / r.u ** 4 * eval_poly(r.source.to_poly(), r.u * cos(theta))


def solve_critical_quartic(r: QuarticReduction) -> CriticalSet:
    """Critical points of f4 in (0, pi) from the cubic 32x^3 - 16x + a on (-1, 1)"""
    return build_critical_set(critical_roots_in_unit_interval(r.critical_poly()))


def quartic_label(n_int: int, plus: int, minus: int) -> Optional[str]:
    n_real = n_int + plus + minus
    if n_real in (0, 2, 4):
        return f"Quartic({n_real})"
    return None


def _reducer(dq: DepressedQuartic) -> QuarticReduction:
    return reduce_quartic(dq.m, dq.p, dq.q, source=dq)


def classify_depressed_quartic(dq: DepressedQuartic, eps_tangent: Optional[float] = None,
                               u_min: Optional[float] = None,
                               refine_roots: bool = True) -> ClassificationReport:
    return run_pipeline(dq, _reducer, solve_critical_quartic, quartic_label,
                        eps_tangent=eps_tangent, u_min=u_min, refine_roots=refine_roots)


def classify_quartic(m: float, p: float, q: float, eps_tangent: Optional[float] = None,
                     u_min: Optional[float] = None,
                     refine_roots: bool = True) -> ClassificationReport:
    """
    Classify t^4 + m t^2 + p t + q into 0, 2 or 4 distinct real roots.

    m >= 0 and degenerate inputs are answered by the Sturm oracle.

    Raises:
        InvalidInput: non-finite coefficients
    """
    require_finite((m, p, q))
    dq = DepressedQuartic(m=m, p=p, q=q)
    return classify_depressed_quartic(dq, eps_tangent, u_min, refine_roots)


def classify_general_quartic(coeffs: List[float], eps_tangent: Optional[float] = None,
                             u_min: Optional[float] = None) -> ClassificationReport:
    """
    Classify a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0 (descending, a4 != 0).

    Normalizes to monic and removes the cubic term with the shift a3/4; reported
    roots are in the original variable.

    Raises:
        InvalidInput: wrong arity, zero leading coefficient or non-finite values
    """
    if len(coeffs) != 5:
        raise InvalidInput(f"a quartic needs 5 coefficients, got {len(coeffs)}")
    values = [float(c) for c in coeffs]
    require_finite(values)
    lead = values[0]
    if lead == 0.0:
        raise InvalidInput("leading coefficient a4 must be non-zero")
    a3, a2, a1, a0 = (v / lead for v in values[1:])
    dq = depress_quartic(a3, a2, a1, a0)
    return classify_depressed_quartic(dq, eps_tangent, u_min)
