"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised for arguments outside an operation's domain."""


class ResourceLimitError(RuntimeError):
    """Raised when a generator or search would exceed its configured budget."""


class InvariantViolation(RuntimeError):
    """Raised when two independent evaluation routes disagree."""
