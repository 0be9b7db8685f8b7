"""Exception hierarchy shared by every module of the package."""


class ChromaticRamseyError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ChromaticRamseyError, ValueError):
    """Malformed graph input (bad vertex index, loop edge, ...)."""


class CapacityError(ChromaticRamseyError):
    """A construction would exceed the vertex capacity."""


class SizeLimitError(ChromaticRamseyError):
    """Input too large for an exact (exponential-time) computation."""


class BudgetExceededError(ChromaticRamseyError):
    """A search ran out of its explicit resource budget."""


class Graph6Error(ChromaticRamseyError, ValueError):
    """Malformed graph6 data."""


class DatasetError(ChromaticRamseyError):
    """Missing, unparsable or invalid Ramsey list data."""
