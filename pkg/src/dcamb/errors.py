class InvariantViolation(RuntimeError):
    """A structural guarantee of the construction failed to hold."""
