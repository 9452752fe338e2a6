"""
Core Constants and Build-Time Limits

This module defines the caps, format markers and console conventions shared
by every kblab stage. Stage-specific settings live in the stage's own
constants module (atlas_constants, lab_constants).
"""

# =============================================================================
# VERTEX LIMITS
# =============================================================================

# Largest supported graph order; a VertexSet fits one 64-bit word
MAX_VERTICES = 64

# Largest subset-scan oracle input (2^n subsets are visited)
BRUTE_FORCE_CAP = 20


# =============================================================================
# GRAPH6 FORMAT
# =============================================================================

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_OFFSET = 63
GRAPH6_MAX_CHAR = 126
GRAPH6_BITS_PER_CHAR = 6

# Orders at or below this use the one-byte size header
GRAPH6_SHORT_N = 62

# '~' prefix introduces the 18-bit size header
GRAPH6_LONG_MARKER = "~"
GRAPH6_LONG_N = 258047


# =============================================================================
# TEXT FORMATS
# =============================================================================

EDGE_LIST_COMMENT = "#"
GRAPH6_SUFFIXES = (".g6", ".graph6")
EDGE_LIST_SUFFIXES = (".txt", ".edges", ".el")


# =============================================================================
# CONSOLE OUTPUT
# =============================================================================

SEPARATOR_LINE = "=" * 80
CHECK_MARK = "✓"
CROSS_MARK = "✗"

# Long sweeps print one progress line per this many items
PROGRESS_EVERY = 500
