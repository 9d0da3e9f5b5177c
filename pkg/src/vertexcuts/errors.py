"""Exception types shared across the package."""


class VertexCutError(Exception):
    """Base class for errors raised by this package."""


class GraphFormatError(VertexCutError):
    """Malformed or non-simple edge-list input."""


class NoVertexCutError(VertexCutError):
    """No vertex cut can separate the requested terminals (direct adjacency)."""


class UnclassifiedRegimeError(VertexCutError):
    """Pair classification requested outside the n > 4*kappa regime."""


class NotMinimumConfigError(VertexCutError):
    """A (C, D, kappa) configuration whose min cut value differs from kappa."""


class IndexFormatError(VertexCutError):
    """Corrupt, truncated, or wrong-version serialized index."""


class OracleSizeError(VertexCutError):
    """Instance too large for an exhaustive oracle (override to force)."""
