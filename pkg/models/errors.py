"""Exception hierarchy shared by all toolkit modules."""


class BraidForgeError(Exception):
    """Base class for every domain error raised by the toolkit."""


class InvalidWordError(BraidForgeError, ValueError):
    """Malformed braid or group word, or index out of range."""


class StrandMismatchError(BraidForgeError, ValueError):
    """Operands live in braid groups with different strand counts."""


class GraphFormatError(BraidForgeError, ValueError):
    """Malformed graph file or invalid Coxeter matrix."""


class ScalarModeError(BraidForgeError):
    """Requested scalar mode cannot represent the bond labels of the graph."""


class InfiniteTypeError(BraidForgeError):
    """Full root enumeration requested on a graph of non-finite type."""


class NotSmallTypeError(BraidForgeError):
    """Surface construction requested on a graph with a bond outside {2, 3}."""


class UnsupportedGraphError(BraidForgeError):
    """Essential certificate requested on a graph that is not irreducible and indefinite."""


class RootNormError(BraidForgeError):
    """Reflection requested in a vector whose canonical norm is not 1."""


class HandleBudgetExceeded(BraidForgeError, RuntimeError):
    """Handle reduction exceeded its step budget."""


class ClassificationMismatch(BraidForgeError):
    """Eigenvalue classification disagrees with the Coxeter graph catalog."""


class ConsistencyError(BraidForgeError):
    """Two independent procedures produced contradicting answers."""


class UsageError(BraidForgeError):
    """Command line usage problem (missing file, bad flag combination)."""
