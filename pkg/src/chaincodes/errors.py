"""Exception types shared across the library."""


class ChainCodesError(Exception):
    """Base class for all library errors."""


class SpecError(ChainCodesError, ValueError):
    """Invalid ring / code / partition specification."""


class BudgetExceeded(ChainCodesError):
    """An exhaustive operation would exceed the configured enumeration budget."""


class NotCyclic(ChainCodesError):
    """The operation requires a shift-invariant code."""


class SingletonViolation(ChainCodesError):
    """The mod-u residue condition needed for contraction does not hold."""
