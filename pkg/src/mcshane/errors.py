"""Exception hierarchy.

Every error raised on purpose by this package derives from ``McShaneError``,
which is itself a ``ValueError`` so callers that only care about bad input can
catch the builtin.
"""


class McShaneError(ValueError):
    pass


class PoleError(McShaneError):
    """Input sits exactly on a pole of a principal-branch function."""


class SingularConfigurationError(McShaneError):
    """G/S evaluation too close to a pole or branch cut of its closed forms."""


class DomainError(McShaneError):
    pass


class RangeError(McShaneError):
    """Boundary magnitude outside its admissible interval."""


class InvalidCombinationError(McShaneError):
    """Pair of pants ends for which no gap function is defined."""


class InvalidStructureError(McShaneError):
    """Trace data that does not describe a hyperbolic cone/hole/cusp torus."""


class DegenerateStructureError(InvalidStructureError):
    pass


class SeedMismatchError(McShaneError):
    pass
