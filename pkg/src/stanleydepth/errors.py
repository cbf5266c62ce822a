"""Exception and warning types shared across the package."""


class StanleyDepthError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(StanleyDepthError, ValueError):
    """Objects living in rings with different numbers of variables were mixed."""


class DomainError(StanleyDepthError, ValueError):
    """An operation was applied outside the class of inputs it is defined on."""


class PreconditionError(StanleyDepthError, ValueError):
    """A documented precondition (box size, exponent bound, ...) does not hold."""


class NotApplicable(DomainError):
    """A bound's hypotheses are not met by the given support shape."""


class SizeLimitError(StanleyDepthError):
    """An instance exceeds the configured size caps."""


class InvariantViolation(StanleyDepthError, AssertionError):
    """A checked mathematical invariant failed on a concrete instance."""


class VacuousColonWarning(UserWarning):
    """Colon by the zero ideal: the empty intersection is taken to be the unit ideal."""
