"""
Constants used throughout quivergeo.

This module contains shared constants to avoid magic numbers and
improve maintainability.
"""

# Prime fields are limited to p < 2^31
MAX_PRIME = 2**31

# Enumeration budget: maximum number of candidates a single run may visit
DEFAULT_BUDGET = 10_000_000

# Models a point set can be computed through
GRASSMANNIAN_MODELS = ["kronecker", "triple", "full"]
POINT_SOURCES = ["direct", "kronecker", "triple", "full", "moduli", "chart", "degrees"]
BUILD_MODELS = ["beilinson", "modified", "full", "triple", "kronecker", "degrees"]

# Output formats
OUTPUT_FORMATS = ["text", "json"]
DEFAULT_OUTPUT_FORMAT = "text"
DEFAULT_JSON_INDENT = 2

# Verdicts
VERDICT_PASS = "pass"
VERDICT_FAIL = "fail"

# Seed for sampled equation checks
DEFAULT_SAMPLE_SEED = 20240
DEFAULT_SAMPLE_SIZE = 200

# Valid logging levels
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
