"""Errors raised by the polynomial kernel."""


class PolyKernelError(ValueError):
    """Base class for kernel errors."""


class DegenerateInput(PolyKernelError):
    """An operand is zero (or constant) where the operation needs a true
    polynomial — e.g. a resultant with respect to a variable neither input
    contains."""


class ChainCollapse(PolyKernelError):
    """A Euclidean remainder chain never produced the degree asked for
    (it skipped past it, or terminated early on a nonzero constant or a
    higher-degree common factor)."""


class NotAFactor(PolyKernelError):
    """A claimed known factor does not exactly divide the polynomial."""
