"""Exception types shared across the package.

Each class carries a short ``code`` used by the command line front end to
produce a distinct diagnostic per failure kind.
"""


class HocohError(Exception):
    code = "error"


class DomainMismatch(HocohError):
    code = "domain-mismatch"


class DimBoundExceeded(HocohError):
    code = "dim-bound-exceeded"


class BadIndex(HocohError):
    code = "bad-index"


class EnumerationBudgetExceeded(HocohError):
    code = "budget-exceeded"


class TruncationError(HocohError):
    code = "truncated"


class InvalidSquiggle(HocohError):
    code = "invalid-squiggle"


class InvalidStructure(HocohError):
    """Raised when input data violates a structural invariant (unit laws, nesting...)."""

    code = "invalid-structure"
