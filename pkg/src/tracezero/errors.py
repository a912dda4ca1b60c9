"""Exception types shared across the package."""


class TraceZeroError(Exception):
    """Base class for all package errors."""


class NonPrimeError(TraceZeroError, ValueError):
    """A field characteristic failed the primality check."""


class NonMonicError(TraceZeroError, ValueError):
    """A polynomial that must be monic is not."""


class BudgetExceededError(TraceZeroError, RuntimeError):
    """An enumeration would exceed the configured element or pair cap."""


class NonIntegralError(TraceZeroError, ArithmeticError):
    """An exact integer division came out inexact.

    The closed-form counts are integers by construction, so this always
    signals inconsistent inputs or an implementation bug, never bad luck.
    """


class HasseWeilError(TraceZeroError, ValueError):
    """A point count or power sum landed outside the Hasse-Weil range."""


class NegativeCountError(TraceZeroError, ArithmeticError):
    """A predicted point count came out negative (corrupted coefficients)."""


class ZeroEvaluationError(TraceZeroError, ValueError):
    """A sequence entry evaluated to zero where only units are allowed."""


class InvariantError(TraceZeroError, RuntimeError):
    """An internal self-check failed."""
