"""
Atlas Constants and Configuration

This module defines the caps for canonicalization and exhaustive generation,
and the table and column names of the SQLite atlas cache.

Centralizing these values keeps the generator, the cache and the CLI help
text in agreement.
"""

# =============================================================================
# SIZE CAPS
# =============================================================================

# Largest order accepted by the refinement-based canonical form
CANONICAL_CAP = 16

# Largest order accepted by the all-permutations canonical form
EXHAUSTIVE_FALLBACK_CAP = 9

# Largest order produced by exhaustive generation
GENERATION_CAP = 8

# Largest order the labeled-enumeration oracle is allowed to scan
LABELED_ORACLE_CAP = 7


# =============================================================================
# CANONICAL FORM METHODS
# =============================================================================

METHOD_REFINE = "refine"
METHOD_EXHAUSTIVE = "exhaustive"


# =============================================================================
# ATLAS CACHE (SQLite)
# =============================================================================

DEFAULT_ATLAS_DB_PATH = "database/atlas.db"

TABLE_GRAPHS = "graphs"

# Composite primary key: (n, position)
GRAPHS_N = "n"
GRAPHS_POSITION = "position"

GRAPHS_GRAPH6 = "graph6"
GRAPHS_EDGES = "edges"
GRAPHS_TWIN_FREE = "twin_free"


# =============================================================================
# COUNT SUMMARY KEYS
# =============================================================================

SUMMARY_N = "n"
SUMMARY_CONNECTED = "connected"
SUMMARY_TWIN_FREE = "twin_free"
