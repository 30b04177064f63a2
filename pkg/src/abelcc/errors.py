"""Exception hierarchy shared by the algebra, decider and CLI layers."""


class AbelCCError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AbelCCError, ValueError):
    """Malformed or out-of-range user input."""


class DegreeLimitError(InputError):
    pass


class NotRealTypeError(AbelCCError, ValueError):
    """A Laurent polynomial lacks the conjugate-reciprocal symmetry."""


class NotPeriodicError(AbelCCError, ValueError):
    """An antiderivative was requested for a trig polynomial with nonzero mean."""


class DegenerateInputError(AbelCCError, ValueError):
    pass


class InternalInconsistency(AbelCCError, RuntimeError):
    """A step that the theory guarantees has failed; never swallowed."""
