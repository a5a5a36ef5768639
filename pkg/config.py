"""
Configuration settings for the m-Tamari interval toolkit
"""
from typing import Tuple

# Lattice settings
DEFAULT_VERTEX_CAP: int = 100000  # Largest poset build_poset will attempt
MAX_DECOMPOSITION_SIZE: int = 6
MAX_ORDER_MATRIX_CELLS: int = 64_000_000  # size^2 budget for the order matrix of a poset

# Series settings
MAX_SERIES_ORDER: int = 40
DEFAULT_SERIES_ORDER: int = 6

# Algebra settings
POWER_SUM_WINDOW_FACTOR: int = 1  # window is factor * (m + 2) * N on each side
MAX_POWER_SUM_WINDOW: int = 2000
# Rational u with 1 + 4u a perfect square; the m=2 roots are rational there
RADICAL_SAMPLE_POINTS: Tuple[int, ...] = (6, 12, 20)
RECIPROCAL_SAMPLE_POINTS: Tuple[int, ...] = (2, 3, 5)
MAX_SYMBOLIC_ROOT_ORDER: int = 4  # highest order checked through the explicit roots in s
RECONSTRUCT_TRIALS: int = 20

# Cache settings
DEFAULT_CACHE_DIR: str = ".tamari-cache"
CACHE_DIR_ENV: str = "TAMARI_CACHE_DIR"
CACHE_SCHEMA_VERSION: int = 1

# Exit codes
EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_CAP: int = 2
EXIT_MISMATCH: int = 3
EXIT_INVALID: int = 4

# Logging settings
LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DEFAULT_LOG_LEVEL: str = "WARNING"

# Check defaults used by `verify`
DEFAULT_CHECK_SIZE: int = 4
DEFAULT_CHECK_ORDER: int = 6
