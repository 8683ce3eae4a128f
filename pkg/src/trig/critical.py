"""
Interior critical points of f on (0, pi).

Since sin 5 theta = sin theta U4(cos theta) and sin theta > 0 on (0, pi), the
critical points are the roots in (-1, 1) of

    g(x) = 80x^4 - 60x^2 + 2 alpha x + (beta + 5),    x = cos theta.
"""
from math import acos, sqrt
from typing import List, Tuple
import logging

from pydantic import BaseModel, ConfigDict

from .. import config
from ..polynomial.oracle import isolate_and_refine
from ..polynomial.poly_core import Poly
from .reduction import TrigReduction

logger = logging.getLogger(__name__)


class CriticalSet(BaseModel):
    """Critical angles of f, sorted ascending, with their x = cos(theta)"""

    model_config = ConfigDict(frozen=True)

    thetas: Tuple[float, ...] = ()
    xs: Tuple[float, ...] = ()
    used_biquadratic: bool = False
    boundary_degenerate: bool = False

    def __len__(self) -> int:
        return len(self.thetas)


def critical_g(r: TrigReduction, x: float) -> float:
    """80x^4 - 60x^2 + 2 alpha x + (beta + 5)"""
    x2 = x * x
    return 80.0 * x2 * x2 - 60.0 * x2 + 2.0 * r.alpha * x + (r.beta + 5.0)


def _cluster(xs: List[float]) -> List[float]:
    """Merge roots closer than CLUSTER_TOLERANCE (multiple roots of g)"""
    merged: List[float] = []
    for x in sorted(xs):
        if merged and x - merged[-1] < config.CLUSTER_TOLERANCE:
            continue
        merged.append(x)
    return merged


def build_critical_set(xs: List[float], used_biquadratic: bool = False) -> CriticalSet:
    """
    Keep roots strictly inside (-1, 1), flag those within BOUNDARY_X_TOLERANCE
    of an endpoint, and map through arccos.
    """
    limit = 1.0 - config.BOUNDARY_X_TOLERANCE
    inside, boundary = [], False
    for x in _cluster(xs):
        if abs(x) < limit:
            inside.append(x)
        elif abs(x) <= 1.0 + config.BOUNDARY_X_TOLERANCE:
            boundary = True
    # theta ascending means x descending
    inside.sort(reverse=True)
    return CriticalSet(
        thetas=tuple(acos(x) for x in inside),
        xs=tuple(inside),
        used_biquadratic=used_biquadratic,
        boundary_degenerate=boundary,
    )


def critical_roots_in_unit_interval(g: Poly) -> List[float]:
    """Real roots of g on [-1, 1] (plus a boundary margin) by Sturm isolation"""
    margin = 2.0 * config.BOUNDARY_X_TOLERANCE
    return isolate_and_refine(g, -1.0 - margin, 1.0 + margin)


def biquadratic_roots(beta: float) -> List[float]:
    """
    Closed form for alpha = 0: 80y^2 - 60y + (beta + 5) = 0 with y = x^2 gives

        x^2 = (3 +- sqrt((25 - 4 beta) / 5)) / 8.
    """
    disc = (25.0 - 4.0 * beta) / 5.0
    if disc < 0.0:
        return []
    root = sqrt(disc)
    xs: List[float] = []
    for y in {(3.0 + root) / 8.0, (3.0 - root) / 8.0}:
        if y < 0.0:
            continue
        x = sqrt(y)
        xs.append(x)
        if x != 0.0:
            xs.append(-x)
    return xs


def solve_critical(r: TrigReduction) -> CriticalSet:
    """
    All critical points of f in (0, pi).

    Uses the biquadratic closed form when alpha is exactly 0 (the reduced
    quintic), otherwise Sturm isolation of g on (-1, 1) with bisection to
    BISECTION_TOLERANCE in x.
    """
    if r.alpha == 0.0:
        return build_critical_set(biquadratic_roots(r.beta), used_biquadratic=True)
    return build_critical_set(critical_roots_in_unit_interval(r.critical_poly()))
