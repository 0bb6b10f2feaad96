"""Exception types shared across the package."""


class ScaleGuardError(ValueError):
    """Input exceeds the size an exact exponential-time routine is allowed to take."""


class NotClosedError(ValueError):
    """A closed labeling was required but the graph's labeling is not closed."""
