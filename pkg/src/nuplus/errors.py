"""Exception types shared across the package."""


class InvalidKnotData(ValueError):
    """Input data does not describe an L-space knot (bad semigroup, polynomial, ...)."""


class PreconditionError(ValueError):
    """A computation was asked for outside the range where its formula is valid."""


class TruncationError(RuntimeError):
    """The truncated complex is too small to identify the homology tower."""


class ConventionError(RuntimeError):
    """An internal consistency check on the chain-level model failed.

    This always signals a bug in a sign/grading convention, never bad user input.
    """
