"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all errors raised by this package."""


class MalformedInput(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NotStable(GraphError):
    pass


class EmptySource(GraphError):
    pass


class BadParams(GraphError):
    pass


class TooLarge(GraphError):
    pass


class InvalidMatching(GraphError):
    pass


class NotAPermutation(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class InternalInconsistency(RuntimeError):
    """Two routes that must agree did not; this is a bug, not a math result."""


class StructureNotFound(RuntimeError):
    """A structure guaranteed by a theorem could not be located."""
