"""Exception types shared by every module.

Two failure modes are distinguished so that callers (and the CLI exit
codes) can tell malformed input apart from a violated mathematical
hypothesis.
"""


class InputError(ValueError):
    """Structurally invalid input: wrong shape, rank mismatch, bad JSON field."""


class PreconditionError(ValueError):
    """A mathematical hypothesis of the operation fails (e.g. a Gram matrix
    that is not positive definite, a non-primitive vector, a non-general
    polarization)."""
