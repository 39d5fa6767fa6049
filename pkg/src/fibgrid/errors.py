"""Exception types shared across the package."""


class IndexCapError(Exception):
    """A requested term index is beyond the configured cap.

    This is a refusal to spend resources, not a mathematical failure.
    """

    def __init__(self, index, cap):
        super().__init__(f"index {index} exceeds cap {cap}")
        self.index = index
        self.cap = cap


class InvariantViolation(RuntimeError):
    """An exact computation produced a value that should be impossible.

    Raised only when an internal consistency check fails, which means
    the implementation (not the input) is wrong.
    """


class ClosedFormError(InvariantViolation):
    """The closed-form sum came out irrational or non-integral."""


class VerificationError(InvariantViolation):
    """Two independent computation routes disagreed."""
