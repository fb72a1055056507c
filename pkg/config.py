import os
from dotenv import load_dotenv

load_dotenv()

# ─────────────────────────────────────────────────────────────
# Logging
# ─────────────────────────────────────────────────────────────

def get_log_level():
    # Diagnostics only; primary output never depends on the environment
    return os.getenv("LOG_LEVEL", "WARNING").upper()

# ─────────────────────────────────────────────────────────────
# Document Format
# ─────────────────────────────────────────────────────────────

SCHEMA_VERSION = "1"
JSON_INDENT = 2

# ─────────────────────────────────────────────────────────────
# Search / Derivation Budgets
# ─────────────────────────────────────────────────────────────

# Expanded states for bidirectional search
DEFAULT_SEARCH_BUDGET = 1_000_000

# Elementary rewriting steps for the deterministic H1/H2 aligner
DEFAULT_ALIGN_BUDGET = 5_000_000

# ─────────────────────────────────────────────────────────────
# CLI Exit Codes
# ─────────────────────────────────────────────────────────────

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2

# ─────────────────────────────────────────────────────────────
# DOT Rendering
# ─────────────────────────────────────────────────────────────

DOT_SHAPES = {
    "black": "point",
    "crossing": "circle",
    "braiding": "hexagon",
    "nucleon_out": "doublecircle",
    "nucleon_in": "doublecircle",
    "big_nucleon_out": "doubleoctagon",
    "big_nucleon_in": "doubleoctagon",
    "transition": "box",
    "transition_cw": "box",
    "sigma_burst_out": "diamond",
    "sigma_burst_in": "diamond",
}
