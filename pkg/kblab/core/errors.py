"""
Exception hierarchy shared by every kblab module.

Bad arguments subclass ValueError so callers that only know the standard
library still catch them.
"""


class KBLabError(Exception):
    """Base class for all kblab errors."""


class GraphValidationError(KBLabError, ValueError):
    """A graph or vertex set violates a structural invariant."""


class Graph6FormatError(KBLabError, ValueError):
    """A graph6 record cannot be decoded."""


class EdgeListFormatError(KBLabError, ValueError):
    """An edge-list text cannot be decoded."""


class CapExceededError(KBLabError, ValueError):
    """A size cap (vertex count, generation order, search bound) was exceeded."""


class PreconditionError(KBLabError, ValueError):
    """An operation was called on input outside its precondition."""


class NotABicliqueError(KBLabError, ValueError):
    """A candidate vertex-set pair is not a biclique of the host graph."""


class NoFamilyMatchError(KBLabError):
    """A degree-two KB-vertex matches neither structural family."""


class StalePlanError(KBLabError):
    """A removal plan no longer validates against its host graph."""


class VerificationError(KBLabError):
    """A constructed certificate failed independent re-verification."""


class ResidualTwinsError(KBLabError):
    """A single twin-reduction pass left false twins behind."""
