"""Exception hierarchy.

Every library error derives from :class:`BalancedCoverError` (itself a
``ValueError``) so callers can catch one type; the CLI maps the subclasses
onto exit codes.
"""


class BalancedCoverError(ValueError):
    pass


class ValidationError(BalancedCoverError):
    """An object violates a structural invariant (weight sum, block sizes, ...)."""


class FormatError(BalancedCoverError):
    """Serialized input is malformed."""


class InvalidSubsetError(BalancedCoverError):
    pass


class PreconditionError(BalancedCoverError):
    pass


class DimensionError(PreconditionError):
    pass


class UniformityError(PreconditionError):
    pass


class InvalidGraphError(ValidationError):
    pass


class ArityError(PreconditionError):
    pass


class SizeError(PreconditionError):
    """Input exceeds a configured brute-force cap."""


class ParameterError(PreconditionError):
    pass


class InfeasibleError(PreconditionError):
    pass


class ReductionError(PreconditionError):
    pass


class GenerationFailure(BalancedCoverError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvariantViolation(AssertionError):
    """A proven inequality failed on our own output; always a library bug."""
