"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad vertex, bad spec string, ...)."""


class PreconditionError(ValueError):
    """An operation's mathematical precondition does not hold.

    ``witness`` carries a certificate when one is available, e.g. the induced
    chordless cycle that makes a complement non-chordal.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(RuntimeError):
    """Refusal to run an exponential computation above its configured cap."""


class InvariantViolation(AssertionError):
    """Two independent computations disagree.  Always a bug, never a result."""
