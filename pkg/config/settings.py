"""
Configuration settings for the shallow-minor clique cover toolkit
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name, "")
    return int(value) if value.strip() else default


def _float_env(name: str, default: float | None) -> float | None:
    value = os.getenv(name, "")
    return float(value) if value.strip() else default


def _bool_env(name: str, default: bool) -> bool:
    value = os.getenv(name, "")
    if not value.strip():
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent
CONFIG_DIR = BASE_DIR / "config"
REPORTS_DIR = Path(os.getenv("REPORTS_DIR", str(BASE_DIR / "reports")))
CORPORA_PATH = CONFIG_DIR / "corpora.json"

# Versioning (reports embed both)
TOOLKIT_VERSION = os.getenv("TOOLKIT_VERSION", "0.3.0")
REPORT_SCHEMA_VERSION = 1

# Exact-search caps (vertex counts unless noted)
EXACT_MIS_CAP = _int_env("EXACT_MIS_CAP", 64)
EXACT_COLORING_CAP = _int_env("EXACT_COLORING_CAP", 64)
EXACT_BANDWIDTH_CAP = _int_env("EXACT_BANDWIDTH_CAP", 12)
EXACT_CCW_CAP = _int_env("EXACT_CCW_CAP", 10)
EXACT_SEPARATOR_CAP = _int_env("EXACT_SEPARATOR_CAP", 18)  # blocks of the cover
EXACT_BICLIQUE_CAP = _int_env("EXACT_BICLIQUE_CAP", 40)
ORIENTATION_CAP = _int_env("ORIENTATION_CAP", 200)

# Shallow-minor enumeration budget
MAX_MODELS = _int_env("MAX_MODELS", 1_000_000)
MAX_SECONDS = _float_env("MAX_SECONDS", None)  # None = no wall-clock budget

# Generators
DEFAULT_SEED = _int_env("DEFAULT_SEED", 0)
CHORDAL_DENSITY = _float_env("CHORDAL_DENSITY", 0.3)
COMPLEMENT_BIPARTITE_DENSITY = _float_env("COMPLEMENT_BIPARTITE_DENSITY", 0.5)

# Reports
REPORT_INCLUDE_TIMINGS = _bool_env("REPORT_INCLUDE_TIMINGS", False)
DEFAULT_T_RANGE = (0, 1)

# Parameters cmd_compute understands, in report order
COMPUTABLE_PARAMS = [
    "beta",
    "nbr_beta",
    "ccw",
    "beta_hat",
    "grad",
    "k_t",
    "p_t",
    "s_t",
    "s",
    "p",
    "degeneracy",
]
