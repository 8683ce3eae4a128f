"""
Report types produced by the classifier
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..polynomial.oracle import RootMultiplicity
class Flag(str, Enum):
    """Report flags; those in ORACLE_RESOLVED route the final count through the oracle"""

    TANGENT_ZERO = "TangentZero"
    BOUNDARY_ROOT = "BoundaryRoot"
    BOUNDARY_CRITICAL = "BoundaryCritical"
    NON_GENERIC_EXTERIOR = "NonGenericExterior"
    SMALL_U = "SmallU"
    METHOD_NOT_APPLICABLE = "MethodNotApplicable"
    MULTIPLE_ROOT = "MultipleRoot"
    ORACLE_DISAGREEMENT = "OracleDisagreement"


# NonGenericExterior keeps the trig counts: the exterior count reported is the certified one.
# OracleDisagreement is settled case by case on root-count parity and the companion count.
ORACLE_RESOLVED = frozenset({
    Flag.TANGENT_ZERO, Flag.BOUNDARY_ROOT, Flag.BOUNDARY_CRITICAL, Flag.SMALL_U,
    Flag.METHOD_NOT_APPLICABLE, Flag.MULTIPLE_ROOT,
})


class Method(str, Enum):
    TRIG = "TrigMethod"
    ORACLE = "OracleFallback"


class InteriorCount(BaseModel):
    """Zeros of f on [0, pi] from the sign pattern over the critical nodes"""

    model_config = ConfigDict(frozen=True)

    n_int: int
    brackets: List[Tuple[float, float]]
    zero_nodes: List[float] = []
    flags: List[Flag] = []


class ExteriorCount(BaseModel):
    """Roots in (u, inf) and (-inf, -u): generic indicators and certified counts"""

    model_config = ConfigDict(frozen=True)

    plus: int
    minus: int
    indicator_plus: int
    indicator_minus: int
    certified: bool = True

    @property
    def non_generic(self) -> bool:
        return self.plus != self.indicator_plus or self.minus != self.indicator_minus


class ClassificationReport(BaseModel):
    """
    Full classification of a quintic (degree 5) or depressed quartic (degree 4).

    Field order is the canonical JSON order.
    """

    model_config = ConfigDict(frozen=True)

    degree: int
    n_real: int
    n_complex: int
    n_int: int
    n_ext_plus: int
    n_ext_minus: int
    method: Method
    scenario: Optional[str]
    f0: Optional[float]
    fpi: Optional[float]
    u: Optional[float]
    alpha: Optional[float]
    beta: Optional[float]
    gamma: Optional[float]
    shift: float
    interior_brackets: List[Tuple[float, float]]
    roots: List[float]
    t_roots: List[float]
    theta_zeros: List[float]
    degenerate: List[Flag]
    multiplicities: List[RootMultiplicity]
    critical_method: Optional[str]
    oracle_n_real: int


class SweepRow(BaseModel):
    """One (alpha, beta, gamma) grid point of a parameter-space sweep"""

    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float
    gamma: float
    n_int: int
    f0: float
    fpi: float
