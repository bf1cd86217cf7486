class WebcoordError(Exception):
    """Base class for library errors."""


class TriangulationError(WebcoordError, ValueError):
    pass


class WebFormatError(WebcoordError, ValueError):
    pass


class NotRepresentableError(WebcoordError, ValueError):
    pass


class NotInConeError(WebcoordError, ValueError):
    pass


class IncompatibleWebError(WebcoordError, ValueError):
    pass


class EllipticWebError(WebcoordError, ValueError):
    pass


class StaleSquareError(WebcoordError, ValueError):
    pass


class ContentMismatchError(WebcoordError, ValueError):
    pass


class InvariantError(WebcoordError, AssertionError):
    """A postcondition that must hold for valid input has failed; signals a bug."""


class CorrespondenceError(InvariantError):
    pass
