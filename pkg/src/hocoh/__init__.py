"""Simplicial sets, simplicial categories and homotopy coherent nerves, computed at finite bounds."""

from .errors import (
    BadIndex,
    DimBoundExceeded,
    DomainMismatch,
    EnumerationBudgetExceeded,
    HocohError,
    InvalidSquiggle,
    InvalidStructure,
    TruncationError,
)

__all__ = [
    "BadIndex",
    "DimBoundExceeded",
    "DomainMismatch",
    "EnumerationBudgetExceeded",
    "HocohError",
    "InvalidSquiggle",
    "InvalidStructure",
    "TruncationError",
]

__version__ = "0.1.0"
