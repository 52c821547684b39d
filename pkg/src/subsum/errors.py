"""Exception hierarchy shared by every module."""


class SubsumError(Exception):
    """Base class for errors raised by this package."""


class InvalidGroupError(SubsumError, ValueError):
    pass


class InvalidElementError(SubsumError, ValueError):
    pass


class InvalidParameterError(SubsumError, ValueError):
    pass


class InvalidSubgroupError(SubsumError, ValueError):
    pass


class ResourceLimitError(SubsumError):
    """An exact search was asked to run on a graph above the vertex cap."""


class NumericError(SubsumError, ArithmeticError):
    pass


class NotASumGraphError(SubsumError, ValueError):
    """A graph has a component no (extended) subgroup sum graph can have."""


class AmbiguityError(SubsumError, ValueError):
    """Structure alone does not pin down the requested parameters."""

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class ParseError(SubsumError, ValueError):
    def __init__(self, message, text="", position=0):
        excerpt = text if len(text) <= 60 else text[max(0, position - 20):position + 20]
        super().__init__(f"{message} (at position {position} in {excerpt!r})")
        self.text = text
        self.position = position
