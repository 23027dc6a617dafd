"""Exception hierarchy shared by all periodlab modules."""


class PeriodLabError(Exception):
    """Base class for all periodlab errors."""


class ValidationError(PeriodLabError):
    """An input object violates a documented invariant.

    The message names the violated rule.
    """


class DomainError(ValidationError):
    """A scalar argument is outside the documented domain."""


class UnsupportedConfigurationError(PeriodLabError):
    """The input is valid but outside what the current algorithms handle."""


class NumericError(PeriodLabError):
    """A numerical computation failed (ill-conditioning, non-convergence)."""


class NormalizationError(NumericError):
    """The A-block of a period table is too ill-conditioned to invert."""


class SingularIntegrandError(NumericError):
    """A branch point lies in the interior of an integration segment."""
