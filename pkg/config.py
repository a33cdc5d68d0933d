import os
from typing import Dict, Any

# Tool identity
TOOL_NAME = "fbplab"
TOOL_VERSION = "1.0.0"

# Memory / size guards
CAP_MB = int(os.getenv("FBPLAB_CAP_MB", "512"))
FAMILY_CAP = int(os.getenv("FBPLAB_FAMILY_CAP", "8"))  # exhaustive filter up to this m
WORD_LENGTH_CAP = int(os.getenv("FBPLAB_WORD_LENGTH_CAP", "200000"))
ZIMIN_CAP = int(os.getenv("FBPLAB_ZIMIN_CAP", "20"))
ENUMERATION_CAP = int(os.getenv("FBPLAB_ENUMERATION_CAP", "5000000"))
SUBSTITUTION_BUDGET = int(os.getenv("FBPLAB_SUBSTITUTION_BUDGET", str(5 * 10**8)))
BITSET_CAP = int(os.getenv("FBPLAB_BITSET_CAP", "64"))
ASSOCIATIVITY_CHECK_CAP = 200
DIRECT_J_IDEAL_CAP = 2048  # above this J-triviality is derived from R and L

# Rewriting
RULE_CAP = int(os.getenv("FBPLAB_RULE_CAP", "10000"))
RULE_LENGTH_CAP = int(os.getenv("FBPLAB_RULE_LENGTH_CAP", "40"))
T_SEQUENCE_MAX_DIGITS = 4096

# Sampling / harness
DEFAULT_SEED = int(os.getenv("FBPLAB_SEED", "20240901"))
DEFAULT_SAMPLES = int(os.getenv("FBPLAB_SAMPLES", "100000"))
SAMPLE_BATCH = 20000
DEFAULT_WORKERS = int(os.getenv("FBPLAB_WORKERS", "4"))
EMBEDDING_CAP = 2

# Isoterm search defaults
ISOTERM_EXTRA_LENGTH = 2
ISOTERM_EXTRA_FRESH = 1

# Logging Configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("LOG_FILE")  # no file sink unless set

LOGGING_CONFIG: Dict[str, Any] = {
    'level': LOG_LEVEL,
    'log_file': LOG_FILE,
    'format': '{time:YYYY-MM-DD HH:mm:ss} | {level} | {extra[name]} | {message}'
}


def closure_size_cap() -> int:
    """Largest closure whose full multiplication table fits in FBPLAB_CAP_MB."""
    budget_bytes = CAP_MB * 1024 * 1024
    return max(1, int((budget_bytes // 4) ** 0.5))
