# Provides functionality for application logging and message tracking
import logging

# Configuration class for application settings
class Config:
    # Version string echoed into every report
    TOOL_VERSION = "1.0.0"

    # Maximum number of critical pairs one Gröbner computation may process
    GB_MAX_STEPS = 200000

    # Wall-clock budget for one Gröbner computation in milliseconds (None = unlimited)
    GB_BUDGET_MS = None

    # Monomial order used when none is requested
    DEFAULT_ORDER = "grevlex"

    # Engine used by `kgroups` when none is requested (gb, schur or both)
    DEFAULT_ENGINE = "both"

    # Desk-scale caps for the character identity suite
    CHARRING_MAX_M = 6
    CHARRING_MAX_ST = 3

    # Degree cap for subring expressions (squares of spin generators are quadratic)
    SUBRING_DEGREE_CAP = 2

    # Cases whose K⁰ multiplication table is emitted by default
    STRUCTURE_CONSTANT_CASES = ((8, 3),)

    # Cases exercised by `verify --suite barB|knk` and `kgroups` without --n/--k
    THEOREM_CASES = ((8, 3), (12, 3), (12, 5))

    # Cases exercised by `verify --suite chern`
    CHERN_CASES = ((5, 2), (6, 2), (7, 3), (8, 3), (9, 4))

    # Largest Vandermonde size whose determinant is certified by the chern suite
    VANDERMONDE_MAX_D = 12

    # Logging level and optional log file (stderr is always used)
    LOG_LEVEL = "INFO"
    LOG_FILE = None

# Create an instance of the configuration
config = Config()

# Set up a logger for the application
logger = logging.getLogger("GrassKT")
