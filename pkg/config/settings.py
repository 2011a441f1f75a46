"""Configuration settings for superschur"""

TOOL_NAME = "superschur"
TOOL_VERSION = "0.1.0"
REPORT_SCHEMA_VERSION = "1.0"

# Random 2-step nilpotent corpus
DEFAULT_SEED = 42
DEFAULT_RANDOM_COUNT = 200
RANDOM_MAX_TOTAL_DIM = 7                 # dim V + dim W of each random algebra
COEFFICIENT_POOL = (-2, -1, 0, 1, 2)

# Default verification suite
SUITE_HEISENBERG_MAX = 6                 # all H(m,n) with 1 <= m+n <= 6
SUITE_ABELIAN_MAX = 6                    # all A(m|n) with m+n <= 6
SUITE_COVER_MAX = 5                      # stem covers K(m,n) with m+n <= 5
SUITE_COVER_CHECKS_MAX = 3               # covers that also get every single-algebra check
SUITE_DIRECT_SUM_ABELIAN_MAX = 3         # A(a|b), a+b <= 3, paired with each other and the Heisenbergs below
SUITE_DIRECT_SUM_HEISENBERG = ((1, 0), (0, 2), (1, 1), (2, 0))
SUITE_EQUALITY_H10 = ((3, 0), (4, 0), (4, 1), (5, 2))
SUITE_EQUALITY_H01 = ((1, 1), (2, 1), (2, 2))

# Stated values contradicted by the homology computation; reported as DISCREPANCY instead of FAIL
DOCUMENTED_HEISENBERG_DISCREPANCIES = ((0, 1),)
DOCUMENTED_EQUALITY_DISCREPANCIES = ("H01",)

# Logging (the CLI is the only place handlers are configured)
LOG_LEVEL = "WARNING"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1                         # invalid algebra or FAIL verdict
EXIT_USAGE = 2                           # usage or parse error
EXIT_DISCREPANCY = 3                     # only documented discrepancies, no FAIL

# Modal distributed suite
MODAL_APP_NAME = "superschur"
REMOTE_BATCH_SIZE = 40                   # suite jobs per container call
REMOTE_TIMEOUT = 20 * 60                 # seconds
