"""Domain errors shared by every module in the package."""


class CoxeterError(Exception):
    """Base class for all errors this package raises on bad or oversized input."""


class InvalidMatrix(CoxeterError):
    """The Coxeter matrix (or matrix file) is malformed."""


class LengthCapExceeded(CoxeterError):
    """An element longer than the system's length cap would be constructed."""


class IntervalTooLarge(CoxeterError):
    """A lower-interval enumeration was requested above the configured bound."""


class NotMinimalRep(CoxeterError):
    """An argument required to be a minimal coset representative is not one."""


class EmptyIntersection(CoxeterError):
    """The requested interval/coset intersection is empty (x is not below w)."""


class BadSubsetChain(CoxeterError):
    """A relative operation was called with J not contained in K."""


class NotUnique(CoxeterError):
    """A brute-force search expected a unique maximum and found several maxima."""


class SearchBudgetExceeded(CoxeterError):
    """A bounded rewrite search ran out of budget before deciding."""


class InternalAssertionFailed(CoxeterError):
    """A defensive internal consistency check failed; indicates a bug."""
