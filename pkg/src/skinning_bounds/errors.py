"""Exception types raised on invalid surface data or parameter choices."""


class BoundsError(ValueError):
    """Base class for rejected inputs."""


class NonHyperbolic(BoundsError):
    pass


class SystoleOutOfRange(BoundsError):
    pass


class EpsilonOutOfRange(BoundsError):
    pass


class KappaZero(BoundsError):
    pass


class OffsetExceedsWidth(BoundsError):
    pass


class ParameterOutOfRange(BoundsError):
    pass


class RegimeViolation(RuntimeError):
    """An internal hypothesis of the estimate chain did not hold; this is a bug."""
