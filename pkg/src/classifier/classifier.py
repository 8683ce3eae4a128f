"""
Root classification by the trigonometric reduction, certified by the Sturm
oracle.

Decision procedure:
    1. depress, compute u and (alpha, beta, gamma)
    2. f(0), f(pi)
    3. exterior counts: generic indicators, always certified by Sturm counts
    4. critical points of f in (0, pi)
    5. sign changes of f over {0} + criticals + {pi} give N_int
    6. N_real = N_int + N_ext
Degenerate situations are flagged and resolved by the oracle. When the trig
count and the oracle count differ, root-count parity and the companion-matrix
count decide which one is reported.
"""
from math import acos, cos, pi
from typing import Callable, List, Optional, Tuple
import logging

import numpy as np

from .. import config
from ..exceptions import MethodNotApplicable, NoSignChange
from ..polynomial.oracle import (
    RootMultiplicity, SturmChain, build_chain, cauchy_bound, companion_count,
    count_distinct, isolate_and_refine, multiplicities,
)
from ..polynomial.poly_core import MonicQuintic, Poly, depress, eval_poly
from ..trig.critical import CriticalSet, solve_critical
from ..trig.reduction import TrigReduction, boundary_values, reduce
from .report import (
    ClassificationReport, ExteriorCount, Flag, InteriorCount, Method,
    ORACLE_RESOLVED, SweepRow,
)

logger = logging.getLogger(__name__)


def tangency_threshold(r, eps_tangent: Optional[float] = None) -> float:
    """
    eps_tangent: explicit value, else CHEBROOT_EPS_TANGENT, else
    EPS_TANGENT_FACTOR * (1 + sum of |parameters|).
    """
    absolute = config.resolve_eps_tangent(eps_tangent)
    if absolute is not None:
        return absolute
    return config.EPS_TANGENT_FACTOR * r.scale()


def _ordered(flags) -> List[Flag]:
    return [flag for flag in Flag if flag in flags]


def count_interior(r, c: CriticalSet, eps_tangent: Optional[float] = None) -> InteriorCount:
    """
    Count zeros of f on [0, pi].

    f is monotone between consecutive nodes {0} + criticals + {pi}, so each
    strict sign change is exactly one zero and each node with |f| <= eps_tangent
    is one zero located at that node (flagged as TangentZero or BoundaryRoot).
    """
    eps = tangency_threshold(r, eps_tangent)
    nodes = [0.0, *c.thetas, pi]
    values = [r.f(theta) for theta in nodes]
    is_zero = [abs(v) <= eps for v in values]
    last = len(nodes) - 1

    n_int = 0
    zero_nodes: List[float] = []
    flags = set()
    for i, theta in enumerate(nodes):
        if is_zero[i]:
            n_int += 1
            zero_nodes.append(theta)
            flags.add(Flag.BOUNDARY_ROOT if i in (0, last) else Flag.TANGENT_ZERO)

    brackets: List[Tuple[float, float]] = []
    for i in range(last):
        if is_zero[i] or is_zero[i + 1]:
            continue
        if (values[i] > 0.0) != (values[i + 1] > 0.0):
            n_int += 1
            brackets.append((nodes[i], nodes[i + 1]))

    return InteriorCount(n_int=n_int, brackets=brackets, zero_nodes=zero_nodes,
                         flags=_ordered(flags))


def _open_count(chain: SturmChain, lo: float, hi: float) -> int:
    """Distinct roots in the open interval (lo, hi)"""
    if not lo < hi:
        return 0
    head = chain.head
    n = count_distinct(chain, lo, hi)
    n -= eval_poly(head, lo) == 0.0
    n -= eval_poly(head, hi) == 0.0
    return n


def count_exterior(dq, r, f0: float, fpi: float,
                   chain: Optional[SturmChain] = None) -> ExteriorCount:
    """
    Roots on (u, inf) and (-inf, -u).

    Generic indicators: 1{f(0) < 0} on the right; on the left 1{f(pi) > 0} for
    odd degree and 1{f(pi) < 0} for even degree. The counts reported are always
    the Sturm-certified ones.
    """
    P = dq.to_poly()
    chain = chain or build_chain(P)
    bound = cauchy_bound(P)
    indicator_plus = int(f0 < 0.0)
    indicator_minus = int(fpi > 0.0) if P.degree % 2 else int(fpi < 0.0)
    plus = _open_count(chain, r.u, bound)
    minus = _open_count(chain, -bound, -r.u)
    result = ExteriorCount(plus=plus, minus=minus, indicator_plus=indicator_plus,
                           indicator_minus=indicator_minus, certified=True)
    if result.non_generic:
        logger.warning(
            "Non-generic exterior: indicators (+%d, -%d), certified (+%d, -%d)",
            indicator_plus, indicator_minus, plus, minus,
        )
    return result


def _bisect_theta(r, lo: float, hi: float) -> float:
    f_lo, f_hi = r.f(lo), r.f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise NoSignChange(f"f has the same sign at {lo!r} and {hi!r}")
    for _ in range(config.BISECTION_MAX_ITERATIONS):
        if hi - lo <= config.BISECTION_TOLERANCE:
            break
        mid = 0.5 * (lo + hi)
        f_mid = r.f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def refine_interior_root(r, bracket: Tuple[float, float]) -> float:
    """
    Bisect f on a sign-change bracket to width BISECTION_TOLERANCE and return
    t = u cos(theta).

    Raises:
        NoSignChange: f does not change sign across the bracket
    """
    theta = _bisect_theta(r, *bracket)
    return r.u * cos(theta)


def scenario_label(n_int: int, plus: int, minus: int) -> Optional[str]:
    """Scenario label for a quintic count pattern; bare label when non-generic"""
    n_ext = plus + minus
    n_real = n_int + n_ext
    if n_real == 5:
        return "Thm1"
    if n_real == 3:
        if n_int == 3 and n_ext == 0:
            return "Thm2(a)"
        if n_int == 1 and plus == 1 and minus == 1:
            return "Thm2(b)"
        if n_int == 2 and n_ext == 1:
            return "Thm2(c)"
        return "Thm2"
    if n_real == 1:
        if n_int == 1 and n_ext == 0:
            return "Thm3(a)"
        if n_int == 0 and minus == 1 and plus == 0:
            return "Thm3(b)"
        if n_int == 0 and plus == 1 and minus == 0:
            return "Thm3(c)"
        return "Thm3"
    return None


def _theta_zeros(r, t_roots: List[float]) -> List[float]:
    if r is None:
        return []
    return sorted(acos(max(-1.0, min(1.0, t / r.u))) for t in t_roots if abs(t) <= r.u)


def _z_multiplicities(dq, P: Poly, t_roots: List[float]) -> List[RootMultiplicity]:
    return [RootMultiplicity(root=dq.to_z(m.root), multiplicity=m.multiplicity)
            for m in multiplicities(P, t_roots)]


def _report(degree: int, dq, r, *, n_int: int, plus: int, minus: int, method: Method,
            scenario: Optional[str], flags, brackets, t_roots: List[float],
            mults: List[RootMultiplicity], critical_method: Optional[str],
            oracle_n_real: int) -> ClassificationReport:
    n_real = n_int + plus + minus
    repeated = sum(m.multiplicity - 1 for m in mults)
    f0, fpi = r.boundary_values() if r is not None else (None, None)
    alpha, beta, gamma = r.parameters() if r is not None else (None, None, None)
    return ClassificationReport(
        degree=degree,
        n_real=n_real,
        n_complex=max(0, degree - n_real - repeated),
        n_int=n_int,
        n_ext_plus=plus,
        n_ext_minus=minus,
        method=method,
        scenario=scenario,
        f0=f0,
        fpi=fpi,
        u=r.u if r is not None else None,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        shift=dq.shift,
        interior_brackets=list(brackets),
        roots=sorted(dq.to_z(t) for t in t_roots),
        t_roots=sorted(t_roots),
        theta_zeros=_theta_zeros(r, t_roots),
        degenerate=_ordered(flags),
        multiplicities=mults,
        critical_method=critical_method,
        oracle_n_real=oracle_n_real,
    )


def _oracle_resolved(degree: int, dq, P: Poly, chain: SturmChain, r, flags,
                     oracle_total: int, labeler: Callable, refine_roots: bool,
                     critical_method: Optional[str] = None) -> ClassificationReport:
    """Counts taken from the Sturm oracle; used for m >= 0 and flagged cases"""
    bound = cauchy_bound(P)
    if r is None:
        n_int, plus, minus = oracle_total, 0, 0
        scenario = None
    else:
        plus = _open_count(chain, r.u, bound)
        minus = _open_count(chain, -bound, -r.u)
        n_int = oracle_total - plus - minus
        scenario = labeler(n_int, plus, minus)
    flags = set(flags)
    t_roots: List[float] = []
    mults: List[RootMultiplicity] = []
    if refine_roots:
        t_roots = isolate_and_refine(P, -bound, bound, chain=chain)
        mults = _z_multiplicities(dq, P, t_roots)
        if mults:
            flags.add(Flag.MULTIPLE_ROOT)
    logger.info("Oracle-resolved classification: %d real roots, flags %s",
                oracle_total, [f.value for f in _ordered(flags)])
    return _report(degree, dq, r, n_int=n_int, plus=plus, minus=minus,
                   method=Method.ORACLE, scenario=scenario, flags=flags, brackets=[],
                   t_roots=t_roots, mults=mults, critical_method=critical_method,
                   oracle_n_real=oracle_total)


def trig_count_stands(P: Poly, square_free: bool, trig_total: int, oracle_total: int) -> bool:
    """
    Settle a disagreement between the trig count and the oracle count.

    For square-free P the number of distinct real roots has the parity of the
    degree, so a count of the wrong parity loses. Otherwise the companion-matrix
    eigenvalue count decides, and the oracle keeps the answer unless the
    companion count matches the trig count.
    """
    if square_free:
        trig_ok = trig_total % 2 == P.degree % 2
        oracle_ok = oracle_total % 2 == P.degree % 2
        if trig_ok != oracle_ok:
            return trig_ok
    return companion_count(P) == trig_total


def run_pipeline(dq, reducer: Callable, solver: Callable, labeler: Callable,
                 eps_tangent: Optional[float] = None, u_min: Optional[float] = None,
                 refine_roots: bool = True) -> ClassificationReport:
    """
    Shared decision procedure for a depressed polynomial.

    Args:
        dq: depressed polynomial (DepressedQuintic or DepressedQuartic)
        reducer: dq -> reduction, raising MethodNotApplicable when m >= 0
        solver: reduction -> CriticalSet
        labeler: (n_int, plus, minus) -> scenario label
        eps_tangent: absolute tangency threshold override
        u_min: scale below which the oracle is used
        refine_roots: also compute root values (counts only when False)
    """
    P = dq.to_poly()
    degree = P.degree
    chain = build_chain(P)
    bound = cauchy_bound(P)
    oracle_total = _open_count(chain, -bound, bound)

    try:
        r = reducer(dq)
    except MethodNotApplicable as e:
        logger.info("Falling back to the oracle: %s", e.reason)
        return _oracle_resolved(degree, dq, P, chain, None, {Flag.METHOD_NOT_APPLICABLE},
                                oracle_total, labeler, refine_roots)

    u_min = config.U_MIN if u_min is None else u_min
    if r.u < u_min:
        logger.info("u = %r below u_min = %r, using the oracle", r.u, u_min)
        return _oracle_resolved(degree, dq, P, chain, r, {Flag.SMALL_U},
                                oracle_total, labeler, refine_roots)

    crit = solver(r)
    critical_method = "biquadratic" if crit.used_biquadratic else "sturm"
    interior = count_interior(r, crit, eps_tangent)
    f0, fpi = r.boundary_values()
    ext = count_exterior(dq, r, f0, fpi, chain)

    flags = set(interior.flags)
    if crit.boundary_degenerate:
        flags.add(Flag.BOUNDARY_CRITICAL)
    if ext.non_generic:
        flags.add(Flag.NON_GENERIC_EXTERIOR)
    if not chain.square_free:
        flags.add(Flag.MULTIPLE_ROOT)

    n_real = interior.n_int + ext.plus + ext.minus
    use_oracle = bool(flags & ORACLE_RESOLVED)
    if not use_oracle and n_real != oracle_total:
        flags.add(Flag.ORACLE_DISAGREEMENT)
        use_oracle = not trig_count_stands(P, chain.square_free, n_real, oracle_total)
        logger.warning("Trig count %d disagrees with oracle count %d; reporting the %s count",
                       n_real, oracle_total, "oracle" if use_oracle else "trig")
    if use_oracle:
        return _oracle_resolved(degree, dq, P, chain, r, flags, oracle_total, labeler,
                                refine_roots, critical_method)

    t_roots: List[float] = []
    if refine_roots:
        t_roots = [refine_interior_root(r, b) for b in interior.brackets]
        if ext.plus:
            t_roots += [t for t in isolate_and_refine(P, r.u, bound, chain=chain) if t > r.u]
        if ext.minus:
            t_roots += [t for t in isolate_and_refine(P, -bound, -r.u, chain=chain) if t < -r.u]
    return _report(degree, dq, r, n_int=interior.n_int, plus=ext.plus, minus=ext.minus,
                   method=Method.TRIG, scenario=labeler(interior.n_int, ext.plus, ext.minus),
                   flags=flags, brackets=interior.brackets, t_roots=t_roots, mults=[],
                   critical_method=critical_method, oracle_n_real=oracle_total)


def classify(q: MonicQuintic, eps_tangent: Optional[float] = None,
             u_min: Optional[float] = None, refine_roots: bool = True) -> ClassificationReport:
    """
    Classify a monic quintic into 1, 3 or 5 distinct real roots.

    Raises:
        InvalidInput: non-finite coefficients
    """
    dq = depress(q)
    return run_pipeline(dq, reduce, solve_critical, scenario_label,
                        eps_tangent=eps_tangent, u_min=u_min, refine_roots=refine_roots)


def classify_parameters(alpha: float, beta: float, gamma: float,
                        eps_tangent: Optional[float] = None) -> SweepRow:
    """Interior zero count of f directly in (alpha, beta, gamma) space"""
    r = TrigReduction.from_parameters(alpha, beta, gamma)
    interior = count_interior(r, solve_critical(r), eps_tangent)
    f0, fpi = boundary_values(r)
    return SweepRow(alpha=alpha, beta=beta, gamma=gamma, n_int=interior.n_int, f0=f0, fpi=fpi)


def sweep_grid(alpha: Tuple[float, float, int], beta: Tuple[float, float, int],
               gamma: Tuple[float, float, int]) -> List[Tuple[float, float, float]]:
    """(lo, hi, steps) axes to grid points in row-major (alpha, beta, gamma) order"""
    return [
        (float(a), float(b), float(g))
        for a in np.linspace(*alpha)
        for b in np.linspace(*beta)
        for g in np.linspace(*gamma)
    ]
