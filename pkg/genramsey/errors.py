class GenRamseyError(Exception):
    """Base class for all genramsey exceptions."""


class DomainError(GenRamseyError, ValueError):
    """Parameters fall outside the domain where a formula is proven."""


class BudgetExceeded(GenRamseyError):
    """An exhaustive search was asked to go beyond the configured order budget."""


class Graph6Error(GenRamseyError, ValueError):
    """Malformed graph6 text."""


class CacheError(GenRamseyError):
    """The result cache could not be read or written."""
