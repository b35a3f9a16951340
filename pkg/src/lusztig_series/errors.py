"""Exception types shared across the package."""


class SizeGuardError(ValueError):
    """An enumeration was requested above its safety guard."""


class ShapeInvariantError(ValueError):
    """A centralizer shape violates an invariant for the given group."""


class BelowThresholdError(ValueError):
    """A closed-form bound was requested below its validity threshold."""


class UsageError(ValueError):
    """Bad request parameters (CLI exit code 2 / HTTP 422)."""
