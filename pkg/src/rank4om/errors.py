"""Exception types raised across the package."""


class OMError(ValueError):
    """Base class for invalid oriented-matroid input."""


class GroundSetMismatch(OMError):
    pass


class NonUniformError(OMError):
    pass


class PropagationError(OMError):
    """Basis-exchange propagation of chirotope signs hit a contradiction."""


class SizeGuardError(OMError):
    """An exponential operation was asked to run above its configured size."""


class DegeneracyError(OMError):
    """A point configuration is not in general position."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPolytopeError(OMError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAMutationError(OMError):
    pass


class InfeasibleCorridor(RuntimeError):
    """No routing satisfies the arc constraints.

    For a valid uniform rank-4 matroid polytope this cannot happen, so the
    error signals either a bad input or an internal bug.  ``spec`` carries
    the corridor description for diagnosis.
    """

    def __init__(self, message, spec=None):
        super().__init__(message)
        self.spec = spec


class ClaimViolation(AssertionError):
    """Post-insertion check on a new curve failed (internal bug)."""


class MonotonicityViolation(RuntimeError):
    pass


class ParseError(ValueError):
    pass


class RetryLimitExceeded(RuntimeError):
    pass
