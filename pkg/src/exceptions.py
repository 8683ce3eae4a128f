"""
Error types for chebroot
"""
from typing import Optional


class ChebrootError(Exception):
    """Base class for all chebroot errors"""


class InvalidInput(ChebrootError, ValueError):
    """Non-finite, non-numeric or otherwise unusable coefficients"""


class MethodNotApplicable(ChebrootError):
    """
    The trigonometric reduction needs m < 0.

    This is a recoverable outcome: the classifier catches it and falls back to
    the Sturm oracle.
    """

    def __init__(self, reason: str, m: Optional[float] = None):
        super().__init__(reason)
        self.reason = reason
        self.m = m


class NoSignChange(ChebrootError, ValueError):
    """Bisection was asked to refine a bracket without a strict sign change"""


class ZeroPolynomial(ChebrootError, ValueError):
    """The operation is undefined for the identically-zero polynomial"""
