"""
Lab Constants and Configuration

This module defines the search bounds of the lab sweeps, the output locations
of reports and figures, and the dictionary keys shared by report writers,
re-verification and the markdown index.
"""

# =============================================================================
# SEARCH BOUNDS
# =============================================================================

# Largest host order tried by the preimage search unless overridden
DEFAULT_PREIMAGE_MAX_N = 8

# Largest host order of the small-case fallback of degree-2 removal
FALLBACK_PREIMAGE_MAX_N = 7

# Hosts at or above this order must match one of the two degree-2 families
FAMILY_GUARANTEE_N = 7

# Orders accepted by the Lemma-1 base-case scan
LEMMA1_ORDERS = (6, 7, 8)

# Cycle lengths accepted by the Observation-1 check
OBSERVATION1_K_MIN = 7
OBSERVATION1_K_MAX = 12

# Default host bound of the conjecture harnesses
DEFAULT_CONJECTURE_MAX_N = 7
DEFAULT_CONJECTURE2_K_MAX = 9

# Roundtrip sweep default orders (inclusive)
ROUNDTRIP_MIN_N = 4
ROUNDTRIP_MAX_N = 8

# Exhaustive strip-order exploration refuses graphs above this order
EXHAUSTIVE_ANALYSIS_CAP = 16

# How remove_degree2 obtained H'
CONSTRUCTION_FAMILY = "family"
CONSTRUCTION_LINKED_COPY = "family-linked-copy"
CONSTRUCTION_PREIMAGE = "preimage-search"


# =============================================================================
# OUTPUT CONFIGURATION
# =============================================================================

DEFAULT_REPORT_DIR = "reports"
DEFAULT_FIGURE_DIR = "figures"

REPORT_JSON_EXTENSION = ".json"
REPORT_PARQUET_EXTENSION = ".parquet"
REPORT_INDEX_NAME = "README.md"

# Bumped whenever report keys change
SCHEMA_VERSION = 1


# =============================================================================
# CLAIM IDS
# =============================================================================

CLAIM_LEMMA1 = "lemma1"
CLAIM_OBSERVATION1 = "observation1"
CLAIM_THEOREM2 = "theorem2"
CLAIM_CONJECTURE1 = "conjecture1"
CLAIM_CONJECTURE2 = "conjecture2"
CLAIM_CONJECTURE3 = "conjecture3"


# =============================================================================
# STATUSES AND VERDICTS
# =============================================================================

STATUS_PROVED_YES = "proved-yes"
STATUS_PROVED_NO = "proved-no"
STATUS_UNKNOWN = "unknown"

VERDICT_NOT_BICLIQUE = "not-biclique"
VERDICT_IS_BICLIQUE = "is-biclique"
VERDICT_INCONCLUSIVE = "inconclusive"


# =============================================================================
# REPORT DICTIONARY KEYS
# =============================================================================

REPORT_SCHEMA_VERSION = "schema_version"
REPORT_CLAIM = "claim"
REPORT_PARAMETERS = "parameters"
REPORT_COUNTS = "counts"
REPORT_EXCEPTIONAL = "exceptional"
REPORT_ITEMS = "items"
REPORT_NOTES = "notes"
REPORT_WALL_TIME = "wall_time_s"

# Per-item keys
ITEM_GRAPH6 = "graph6"
ITEM_SUBJECT = "subject"
ITEM_STATUS = "status"
ITEM_CERTIFICATE = "certificate"
ITEM_WITNESS = "witness"
ITEM_DETAIL = "detail"

# Index metadata keys
METADATA_CLAIM = "claim"
METADATA_ITEMS = "items"
METADATA_FILE_SIZE_MB = "file_size_mb"
METADATA_SUMMARY = "summary"


# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3
