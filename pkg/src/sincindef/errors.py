"""Exception types raised by sincindef."""


class SincIndefError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(SincIndefError):
    """An argument lies outside the domain of a function (non-finite, |x| >= 1, ...)."""


class ParameterError(SincIndefError):
    """Discretization parameters violate a selection-rule precondition."""


class SamplingError(SincIndefError):
    """The integrand produced a non-finite value at a sampling node."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ContractError(SincIndefError):
    """Inputs are individually valid but inconsistent with each other."""
