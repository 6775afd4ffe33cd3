"""Exception hierarchy shared by the library and the CLI."""


class PolytreeError(Exception):
    """Base class for all errors raised by polytree."""


class ParseError(PolytreeError, ValueError):
    """Polynomial text does not match the grammar."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class DomainError(PolytreeError, ValueError):
    """The request is well-formed but mathematically out of range."""


class InvalidBase(DomainError):
    pass


class UnsupportedBase(DomainError):
    """A closed-form criterion was asked for a base other than 2."""


class NotPermutational(DomainError):
    pass


class NonLinear(DomainError):
    pass


class ResourceLimitExceeded(DomainError):
    pass
