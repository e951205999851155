"""Exception types shared across the package."""


class AvoidanceError(ValueError):
    """Base class for validation errors raised by this package."""


class MalformedText(AvoidanceError):
    pass


class NotAPartition(AvoidanceError):
    pass


class OutOfRange(AvoidanceError):
    pass


class SizeMismatch(AvoidanceError):
    pass


class ArityMismatch(AvoidanceError):
    pass


class IndexOutOfRange(AvoidanceError):
    pass


class NotUniform(AvoidanceError):
    pass


class BadIndexSet(AvoidanceError):
    pass


class BadParameter(AvoidanceError):
    pass


class NonPositiveTerm(AvoidanceError):
    pass


class ResourceLimit(RuntimeError):
    """A request exceeds a configured enumeration guard."""


class NotAPermutation(AvoidanceError):
    pass
