"""
Polynomial representations, evaluation, derivatives and the Tschirnhaus
depression step.

Coefficient tuples are stored in ascending degree order (constant first), the
same convention as numpy.polynomial.polynomial.
"""
from math import comb, isfinite
from typing import Iterable, Optional, Sequence, Tuple
import logging

import numpy.polynomial.polynomial as npoly
from pydantic import BaseModel, ConfigDict, field_validator, ValidationError

from .. import config
from ..exceptions import InvalidInput

logger = logging.getLogger(__name__)


class Poly(BaseModel):
    """Real polynomial with ascending-degree coefficients"""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[float, ...]

    @field_validator("coeffs", mode="before")
    @classmethod
    def _strip_leading_zeros(cls, value: Iterable[float]) -> Tuple[float, ...]:
        coeffs = [float(c) for c in value]
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        return tuple(coeffs) if coeffs else (0.0,)

    @classmethod
    def from_descending(cls, coeffs: Sequence[float]) -> "Poly":
        """Build from a5, a4, ..., a0 order (the order polynomials are written in)"""
        return cls(coeffs=tuple(reversed([float(c) for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0.0

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def __call__(self, t: float) -> float:
        return eval_poly(self, t)

    def __neg__(self) -> "Poly":
        return Poly(coeffs=tuple(-c for c in self.coeffs))


def eval_poly(P: Poly, t: float) -> float:
    """Horner evaluation of P at t"""
    acc = 0.0
    for c in reversed(P.coeffs):
        acc = acc * t + c
    return acc


def derivative(P: Poly) -> Poly:
    """Formal derivative; a constant maps to the zero polynomial"""
    if P.degree == 0:
        return Poly(coeffs=(0.0,))
    return Poly(coeffs=tuple(npoly.polyder(P.coeffs)))


def remainder(a: Poly, b: Poly) -> Poly:
    """Remainder of a / b"""
    _, rem = npoly.polydiv(a.coeffs, b.coeffs)
    return Poly(coeffs=tuple(rem))


def multiply(a: Poly, b: Poly) -> Poly:
    return Poly(coeffs=tuple(npoly.polymul(a.coeffs, b.coeffs)))


def from_roots(roots: Sequence[float]) -> Poly:
    """Monic polynomial with the given roots (repeats give multiplicity)"""
    return Poly(coeffs=tuple(npoly.polyfromroots(list(roots))))


def shift_coefficients(coeffs: Sequence[float], s: float) -> Tuple[float, ...]:
    """
    Ascending coefficients of Q(t - s) from those of Q, by binomial expansion of
    (t - s)^k.

    Args:
        coeffs: ascending coefficients of Q
        s: amount the variable is shifted by

    Returns:
        Ascending coefficients of the shifted polynomial
    """
    n = len(coeffs)
    out = [0.0] * n
    for j in range(n):
        total = 0.0
        for k in range(j, n):
            total += coeffs[k] * comb(k, j) * (-s) ** (k - j)
        out[j] = total
    return tuple(out)


def _snap(values: Sequence[float], scale: float, tolerance: float) -> Tuple[float, ...]:
    threshold = tolerance * (1.0 + scale)
    return tuple(0.0 if abs(v) <= threshold else v for v in values)


def require_finite(values: Iterable[float]) -> None:
    for v in values:
        if not isfinite(v):
            raise InvalidInput(f"coefficient {v!r} is not finite")


class MonicQuintic(BaseModel):
    """z^5 + a4 z^4 + a3 z^3 + a2 z^2 + a1 z + a0"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    a4: float
    a3: float
    a2: float
    a1: float
    a0: float

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[float]) -> "MonicQuintic":
        """
        Normalize six descending coefficients a5..a0 (a5 != 0) to monic form.

        Raises:
            InvalidInput: wrong count, zero leading coefficient or non-finite values
        """
        if len(coeffs) != 6:
            raise InvalidInput(f"a quintic needs 6 coefficients, got {len(coeffs)}")
        values = [float(c) for c in coeffs]
        require_finite(values)
        lead = values[0]
        if lead == 0.0:
            raise InvalidInput("leading coefficient a5 must be nonzero")
        a4, a3, a2, a1, a0 = (v / lead for v in values[1:])
        try:
            return cls(a4=a4, a3=a3, a2=a2, a1=a1, a0=a0)
        except ValidationError as e:
            raise InvalidInput(str(e)) from e

    def ascending(self) -> Tuple[float, ...]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4, 1.0)

    def to_poly(self) -> Poly:
        return Poly(coeffs=self.ascending())


class DepressedQuintic(BaseModel):
    """
    t^5 + m t^3 + n t^2 + p t + q with t = z + shift.

    The quartic coefficient is zero by construction; there is no field for it.
    """

    model_config = ConfigDict(frozen=True)

    m: float
    n: float
    p: float
    q: float
    shift: float = 0.0

    def to_poly(self) -> Poly:
        return Poly(coeffs=(self.q, self.p, self.n, self.m, 0.0, 1.0))

    def to_z(self, t: float) -> float:
        """Map a depressed-variable value back to the original variable"""
        return t - self.shift


class DepressedQuartic(BaseModel):
    """t^4 + m t^2 + p t + q with t = z + shift"""

    model_config = ConfigDict(frozen=True)

    m: float
    p: float
    q: float
    shift: float = 0.0

    def to_poly(self) -> Poly:
        return Poly(coeffs=(self.q, self.p, self.m, 0.0, 1.0))

    def to_z(self, t: float) -> float:
        return t - self.shift


def depress(q: MonicQuintic, zero_snap: Optional[float] = None) -> DepressedQuintic:
    """
    Tschirnhaus depression: shift = a4/5, P(t) = Q(t - shift).

    Computed coefficients below the snap threshold are set to exactly 0 so that
    the n = 0 fast path is reachable from float input.

    Raises:
        InvalidInput: a coefficient is NaN or infinite
    """
    coeffs = q.ascending()
    require_finite(coeffs)
    tolerance = config.ZERO_SNAP_TOLERANCE if zero_snap is None else zero_snap
    shift = q.a4 / 5.0
    expanded = shift_coefficients(coeffs, shift)
    scale = max(abs(c) for c in coeffs[:-1])
    q0, p1, n2, m3, _ = _snap(expanded[:5], scale, tolerance)
    logger.debug("Depressed quintic: m=%r n=%r p=%r q=%r shift=%r", m3, n2, p1, q0, shift)
    return DepressedQuintic(m=m3, n=n2, p=p1, q=q0, shift=shift)


def depress_quartic(a3: float, a2: float, a1: float, a0: float,
                    zero_snap: Optional[float] = None) -> DepressedQuartic:
    """
    Depress the monic quartic z^4 + a3 z^3 + a2 z^2 + a1 z + a0 with shift a3/4.

    Raises:
        InvalidInput: a coefficient is NaN or infinite
    """
    coeffs = (a0, a1, a2, a3, 1.0)
    require_finite(coeffs)
    tolerance = config.ZERO_SNAP_TOLERANCE if zero_snap is None else zero_snap
    shift = a3 / 4.0
    expanded = shift_coefficients(coeffs, shift)
    scale = max(abs(c) for c in coeffs[:-1])
    q0, p1, m2, _ = _snap(expanded[:4], scale, tolerance)
    return DepressedQuartic(m=m2, p=p1, q=q0, shift=shift)


def third_derivative_positive(dq: DepressedQuintic, t: float) -> bool:
    """P'''(t) = 60 t^2 + 6 m > 0; guaranteed for |t| > u when m < 0"""
    return 60.0 * t * t + 6.0 * dq.m > 0.0
