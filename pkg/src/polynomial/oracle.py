"""
Sturm-sequence oracle: independent real-root counting and isolation.

Used to certify every classification, to resolve degenerate cases and as the
fallback when the trigonometric reduction does not apply (m >= 0).
"""
from typing import List, Optional, Tuple
import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from .. import config
from ..exceptions import ZeroPolynomial
from .poly_core import Poly, derivative, eval_poly, remainder

logger = logging.getLogger(__name__)


class SturmChain(BaseModel):
    """P, then P' and negated remainders of successive divisions, each scaled to unit max-coefficient"""

    model_config = ConfigDict(frozen=True)

    polys: Tuple[Poly, ...]
    square_free: bool = False

    @property
    def head(self) -> Poly:
        return self.polys[0]

    def __len__(self) -> int:
        return len(self.polys)


class RootMultiplicity(BaseModel):
    model_config = ConfigDict(frozen=True)

    root: float
    multiplicity: int


class OracleReport(BaseModel):
    """Result of a pure Sturm-oracle analysis"""

    model_config = ConfigDict(frozen=True)

    degree: int
    n_real: int
    roots: List[float]
    cauchy_bound: float
    multiplicities: List[RootMultiplicity]
    square_free: bool


def _truncate(P: Poly, scale: float, tolerance: float) -> Poly:
    threshold = tolerance * scale
    return Poly(coeffs=tuple(0.0 if abs(c) <= threshold else c for c in P.coeffs))


def _normalized(P: Poly) -> Poly:
    scale = P.max_abs()
    return Poly(coeffs=tuple(c / scale for c in P.coeffs))


def _sturm_sequence(P: Poly, tolerance: float) -> List[Poly]:
    chain = [P, _normalized(derivative(P))]
    while chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        rem = _truncate(-remainder(a, b), a.max_abs(), tolerance)
        if rem.is_zero():
            break
        # positive scaling keeps every sign the chain is evaluated for
        chain.append(_normalized(rem))
    return chain


def build_chain(P: Poly, tolerance: Optional[float] = None) -> SturmChain:
    """
    Standard Sturm sequence of P.

    Every member after P is rescaled to unit max-coefficient, and remainder
    coefficients below tolerance * (max-coefficient of the dividend) are
    dropped. A chain of a square-free P that still stops above degree 0 lost a
    term to the truncation and is rebuilt without it.

    Raises:
        ZeroPolynomial: P is identically zero
    """
    if P.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial is undefined")
    tolerance = config.CHAIN_TRUNCATION if tolerance is None else tolerance
    if P.degree == 0:
        return SturmChain(polys=(P,), square_free=True)

    square_free = not has_multiple_roots(P)
    polys = _sturm_sequence(P, tolerance)
    if square_free and polys[-1].degree > 0 and tolerance > 0.0:
        logger.debug("Chain of a square-free degree %d polynomial stopped at degree %d; "
                     "rebuilding without truncation", P.degree, polys[-1].degree)
        polys = _sturm_sequence(P, 0.0)
    return SturmChain(polys=tuple(polys), square_free=square_free)


def sign_variations(chain: SturmChain, x: float) -> int:
    """Number of sign changes in the chain evaluated at x (zeros skipped)"""
    changes = 0
    previous = 0.0
    for P in chain.polys:
        value = eval_poly(P, x)
        if value == 0.0:
            continue
        if previous != 0.0 and (value > 0.0) != (previous > 0.0):
            changes += 1
        previous = value
    return changes


def _outward(x: float, direction: float) -> float:
    return x + direction * config.ENDPOINT_PERTURBATION * (1.0 + abs(x))


def count_roots(chain: SturmChain, lo: float, hi: float) -> int:
    """
    Distinct real roots in (lo, hi] as V(lo) - V(hi).

    An endpoint at which P vanishes exactly is pushed outward, so such a root is
    counted.
    """
    if not lo < hi:
        raise ValueError(f"count_roots needs lo < hi, got ({lo}, {hi})")
    head = chain.head
    for _ in range(8):
        if eval_poly(head, lo) != 0.0:
            break
        lo = _outward(lo, -1.0)
    for _ in range(8):
        if eval_poly(head, hi) != 0.0:
            break
        hi = _outward(hi, 1.0)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def cauchy_bound(P: Poly) -> float:
    """
    1 + max |a_i / a_lead|; every real root lies in (-B, B).

    Raises:
        ZeroPolynomial: P is identically zero
    """
    if P.is_zero():
        raise ZeroPolynomial("Cauchy bound of the zero polynomial is undefined")
    lead = P.leading
    lower = P.coeffs[:-1]
    if not lower:
        return 1.0
    return 1.0 + max(abs(c / lead) for c in lower)


def _refine_single(chain: SturmChain, lo: float, hi: float, tolerance: float) -> float:
    """Shrink (lo, hi] holding exactly one distinct root"""
    P = chain.head
    f_lo, f_hi = eval_poly(P, lo), eval_poly(P, hi)
    if f_hi == 0.0:
        return hi
    # Even multiplicity gives no sign change; fall back to Sturm counts
    use_sign = (f_lo > 0.0) != (f_hi > 0.0) and f_lo != 0.0
    for _ in range(config.BISECTION_MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tolerance * (1.0 + abs(mid)):
            break
        f_mid = eval_poly(P, mid)
        if f_mid == 0.0:
            return mid
        if use_sign:
            if (f_mid > 0.0) == (f_lo > 0.0):
                lo, f_lo = mid, f_mid
            else:
                hi = mid
        elif sign_variations(chain, lo) - sign_variations(chain, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _crosses(P: Poly, lo: float, hi: float) -> bool:
    """P changes sign across (lo, hi], or vanishes at hi"""
    f_lo, f_hi = eval_poly(P, lo), eval_poly(P, hi)
    return f_hi == 0.0 or (f_lo != 0.0 and (f_lo > 0.0) != (f_hi > 0.0))


def _isolate(chain: SturmChain, lo: float, hi: float, count: int,
             tolerance: float, depth: int, out: List[float], refine: bool) -> None:
    if chain.square_free and count <= 1:
        # Every root of a square-free P is simple, so an odd count shows as a sign change
        crosses = _crosses(chain.head, lo, hi)
        if count == 1 and not crosses and eval_poly(chain.head, lo) != 0.0:
            logger.debug("Dropping a chain root in (%r, %r]: P keeps its sign", lo, hi)
            return
        if count <= 0 and crosses:
            logger.debug("Chain missed the root P brackets in (%r, %r]", lo, hi)
            count = 1
    if count <= 0:
        return
    if count == 1:
        out.append(_refine_single(chain, lo, hi, tolerance) if refine else 0.5 * (lo + hi))
        return
    mid = 0.5 * (lo + hi)
    if depth >= config.MAX_ISOLATION_DEPTH or hi - lo <= tolerance * (1.0 + abs(mid)):
        if chain.square_free and count % 2 == 0 and not _crosses(chain.head, lo, hi):
            logger.debug("Dropping an even chain count near %r: P keeps its sign", mid)
            return
        # Roots closer than the working precision: report the cluster once
        logger.warning("Unresolved root cluster near %r (%d roots)", mid, count)
        out.append(mid)
        return
    if eval_poly(chain.head, mid) == 0.0:
        mid = lo + (hi - lo) * (0.5 + 2.0 ** -10)
    v_lo, v_mid, v_hi = (sign_variations(chain, x) for x in (lo, mid, hi))
    _isolate(chain, lo, mid, v_lo - v_mid, tolerance, depth + 1, out, refine)
    _isolate(chain, mid, hi, v_mid - v_hi, tolerance, depth + 1, out, refine)


def isolate_and_refine(P: Poly, lo: float, hi: float,
                       chain: Optional[SturmChain] = None,
                       tolerance: Optional[float] = None,
                       refine: bool = True) -> List[float]:
    """
    Sorted distinct real roots of P in (lo, hi].

    Recursive bisection with Sturm counts until each subinterval holds one
    root, then bisection on the sign of P (or on Sturm counts for roots of even
    multiplicity) to width tolerance * (1 + |root|). For square-free P each
    isolating interval must also show a sign change of P; a chain count that
    contradicts the signs of P is overruled. With refine=False the isolating
    interval midpoints are returned.
    """
    if not lo < hi:
        raise ValueError(f"isolate_and_refine needs lo < hi, got ({lo}, {hi})")
    chain = chain or build_chain(P)
    tolerance = config.BISECTION_TOLERANCE if tolerance is None else tolerance
    for _ in range(8):
        if eval_poly(P, lo) != 0.0:
            break
        lo = _outward(lo, -1.0)
    for _ in range(8):
        if eval_poly(P, hi) != 0.0:
            break
        hi = _outward(hi, 1.0)
    roots: List[float] = []
    total = sign_variations(chain, lo) - sign_variations(chain, hi)
    _isolate(chain, lo, hi, total, tolerance, 0, roots, refine)
    return sorted(roots)


def count_distinct(chain: SturmChain, lo: float, hi: float) -> int:
    """
    Distinct real roots of chain.head in (lo, hi], counted by isolation so that
    square-free input is checked against the signs of P.
    """
    return len(isolate_and_refine(chain.head, lo, hi, chain=chain, refine=False))


def companion_count(P: Poly, tolerance: float = 1e-7) -> int:
    """
    Distinct real eigenvalues of the companion matrix of P.

    An eigenvalue is real when |imag| <= tolerance * max(1, |value|);
    real values closer than sqrt(tolerance) are merged.
    """
    if P.degree < 1:
        return 0
    values = np.roots(list(reversed(P.coeffs)))
    real = sorted(
        float(v.real) for v in values if abs(v.imag) <= tolerance * max(1.0, abs(v))
    )
    merged: List[float] = []
    for x in real:
        if merged and abs(x - merged[-1]) <= np.sqrt(tolerance) * max(1.0, abs(x)):
            continue
        merged.append(x)
    return len(merged)


def poly_gcd(a: Poly, b: Poly, tolerance: Optional[float] = None) -> Poly:
    """
    Tolerance-aware Euclidean gcd, returned monic.

    Both operands are rescaled to unit max-coefficient at every step; a
    remainder whose coefficients all fall below tolerance counts as zero.
    """
    tolerance = config.GCD_TOLERANCE if tolerance is None else tolerance
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    a, b = _normalized(a), _normalized(b)
    while True:
        rem = _truncate(remainder(a, b), 1.0, tolerance)
        if rem.is_zero():
            break
        a, b = b, _normalized(rem)
    lead = b.leading
    return Poly(coeffs=tuple(c / lead for c in b.coeffs))


def has_multiple_roots(P: Poly) -> bool:
    """True when gcd(P, P') is non-constant"""
    if P.degree < 2:
        return False
    return poly_gcd(P, derivative(P)).degree > 0


def root_multiplicity(P: Poly, root: float, tolerance: Optional[float] = None) -> int:
    """
    Number of successive derivatives of P vanishing at root, relative to the
    evaluation scale sum |c_i| max(1, |root|)^i of each derivative.
    """
    tolerance = config.MULTIPLICITY_TOLERANCE if tolerance is None else tolerance
    reach = max(1.0, abs(root))
    multiplicity = 1
    D = derivative(P)
    while not D.is_zero():
        scale = sum(abs(c) * reach ** i for i, c in enumerate(D.coeffs))
        if scale == 0.0 or abs(eval_poly(D, root)) > tolerance * scale:
            break
        multiplicity += 1
        D = derivative(D)
    return multiplicity


def multiplicities(P: Poly, roots: List[float]) -> List[RootMultiplicity]:
    """Repeated real roots among `roots`, only when gcd(P, P') is non-constant"""
    if not has_multiple_roots(P):
        return []
    found = []
    for r in roots:
        k = root_multiplicity(P, r)
        if k > 1:
            found.append(RootMultiplicity(root=r, multiplicity=k))
    return found


def analyze(P: Poly) -> OracleReport:
    """
    Full oracle analysis: distinct real-root count, refined roots and
    multiplicities.

    Raises:
        ZeroPolynomial: P is identically zero
    """
    chain = build_chain(P)
    bound = cauchy_bound(P)
    roots = isolate_and_refine(P, -bound, bound, chain=chain) if P.degree > 0 else []
    mults = multiplicities(P, roots)
    logger.debug("Oracle: degree %d, %d distinct real roots", P.degree, len(roots))
    return OracleReport(
        degree=P.degree,
        n_real=len(roots),
        roots=roots,
        cauchy_bound=bound,
        multiplicities=mults,
        square_free=not mults and chain.square_free,
    )
