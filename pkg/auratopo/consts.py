from __future__ import absolute_import
import string
"""Constants Package.
Constants:
MAX_EXHAUSTIVE -> Largest universe for all-subsets scans (2^n families)
MAX_HIERARCHY -> Largest universe for hierarchy and separation checks
MAX_COMPONENTS -> Largest universe for spread component extraction
FUZZ_MIN_N, FUZZ_MAX_N -> Bounds accepted for the fuzz --max-n flag
DEFAULT_FUZZ_SEED, DEFAULT_FUZZ_CASES, DEFAULT_FUZZ_MAX_N -> fuzz defaults
DECIMAL_PLACES -> Digits kept when rendering a ratio as a decimal
EXIT_OK, EXIT_FAILURE, EXIT_USAGE -> Process exit statuses of the CLI
POINT_LABELS -> Default point labels, in index order
DEFAULT_LABEL_PATTERN -> Regex for generated labels in fuzz cases
GRID_EPSILON -> Tolerance for grid coordinates against rectangle bounds
"""

MAX_EXHAUSTIVE = 16
MAX_HIERARCHY = 12
MAX_COMPONENTS = 64

FUZZ_MIN_N = 2
FUZZ_MAX_N = 8
DEFAULT_FUZZ_SEED = 42
DEFAULT_FUZZ_CASES = 500
DEFAULT_FUZZ_MAX_N = 6

DECIMAL_PLACES = 3

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

POINT_LABELS = string.ascii_lowercase
DEFAULT_LABEL_PATTERN = r"[a-z][0-9]{2}"

GRID_EPSILON = 1e-9
