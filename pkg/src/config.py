"""
Configuration file for the chebroot quintic root classifier
"""
from pathlib import Path
from typing import Optional
import logging
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


def _env_float(name: str, default: Optional[float]) -> Optional[float]:
    """Read a float from the environment, keeping the default on bad input"""
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not a decimal number", name, raw)
        return default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", name, raw)
        return default


# Depression: coefficients with |c| <= ZERO_SNAP_TOLERANCE * (1 + max|a_i|) become exactly 0
ZERO_SNAP_TOLERANCE = _env_float("CHEBROOT_ZERO_SNAP", 1e-12)

# Tangency threshold: eps_tangent = EPS_TANGENT_FACTOR * (1 + |alpha| + |beta| + |gamma|)
EPS_TANGENT_FACTOR = _env_float("CHEBROOT_EPS_TANGENT_FACTOR", 1e-9)
EPS_TANGENT = _env_float("CHEBROOT_EPS_TANGENT", None)  # absolute override

# Below this substitution scale the classifier routes to the oracle
U_MIN = _env_float("CHEBROOT_U_MIN", 1e-6)

# Root isolation and refinement
BISECTION_TOLERANCE = 1e-13
BISECTION_MAX_ITERATIONS = 200
CHAIN_TRUNCATION = 1e-12
ENDPOINT_PERTURBATION = 1e-12
CLUSTER_TOLERANCE = 1e-9
BOUNDARY_X_TOLERANCE = 1e-10
GCD_TOLERANCE = 1e-9
MULTIPLICITY_TOLERANCE = 1e-6
MAX_ISOLATION_DEPTH = 120

# Output
THETA_SAMPLES = _env_int("CHEBROOT_THETA_SAMPLES", 2001)
TEXT_DECIMALS = 12
CSV_FLOAT_FORMAT = "%.17g"

# FastAPI Configuration
API_HOST = "0.0.0.0"
API_PORT = 8000
API_TITLE = "chebroot Quintic Root Classification API"
API_VERSION = "1.0.0"

# Evaluation Configuration
ROOT = Path(__file__).resolve().parents[1]
EVALUATION_OUTPUT_DIR = ROOT / "evaluation_results"
EVALUATION_PLOTS_DIR = EVALUATION_OUTPUT_DIR / "plots"
CONCORDANCE_SAMPLES = 10000
CONCORDANCE_SEED = 20240607
COEFFICIENT_RANGE = 10.0


def resolve_eps_tangent(cli_value: Optional[float] = None) -> Optional[float]:
    """
    Resolve the absolute tangency threshold.

    Precedence: explicit value, then CHEBROOT_EPS_TANGENT (read now, not at
    import), then the module default. None means "use the relative formula".
    """
    if cli_value is not None:
        return cli_value
    return _env_float("CHEBROOT_EPS_TANGENT", EPS_TANGENT)
