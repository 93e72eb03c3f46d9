"""Exception types shared across the package."""


class DomindexError(Exception):
    """Base class for all errors raised by this library."""


class InvalidEdge(DomindexError):
    """Edge endpoints violate the simple-graph rules."""


class SelfLoop(InvalidEdge):
    """An edge joins a vertex to itself."""


class VertexOutOfRange(DomindexError):
    """Vertex id or label does not belong to the graph."""


class LabelConflict(DomindexError):
    """Two vertices carry the same label."""


class NotAPermutation(DomindexError):
    """Relabeling map is not a bijection on the vertex ids."""


class DisconnectedGraph(DomindexError):
    """Operation requires a connected graph."""


class ExactCapExceeded(DomindexError):
    """Graph is larger than the cap guarding an exponential routine."""


class EnumerationCapExceeded(ExactCapExceeded):
    """Requested exhaustive graph enumeration is too large."""


class VertexNotInSet(DomindexError):
    """Operation requires the vertex to be a member of the given set."""


class NotDominating(DomindexError):
    """Given vertex set does not dominate the graph."""


class InvalidFamilyParams(DomindexError):
    """Family parameters outside the generator's domain."""


class UnsupportedOperation(DomindexError):
    """No closed-form prediction exists for the requested operation."""


class UnknownSuite(DomindexError):
    """Verification suite name not recognised."""


class MalformedLine(DomindexError):
    """Edge-list input line that cannot be parsed."""

    def __init__(self, lineno: int, text: str):
        self.lineno = lineno
        self.text = text
        super().__init__(f"line {lineno}: cannot parse {text!r}")


class InternalInvariantViolation(DomindexError):
    """A computed result failed a self-check that should always hold."""


class DuplicateEdgeWarning(UserWarning):
    """Edge listed more than once in an input file (deduplicated)."""
