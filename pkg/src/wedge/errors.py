"""Exception hierarchy shared by every module."""


class WedgeError(Exception):
    """Base class for domain errors raised by this package."""


class ContainmentError(WedgeError, ValueError):
    """The inner partition of a skew shape is not contained in the outer one."""


class DomainError(WedgeError, ValueError):
    """A partition operator was applied outside the set it is defined on."""


class InsufficientVariables(WedgeError, ValueError):
    """Too few variables to distinguish Schur polynomials of the needed degree."""


class UnsupportedElement(WedgeError, ValueError):
    """The bosonic action is not defined for this element."""


class SizeMismatch(WedgeError, ValueError):
    """A loop element has the wrong matrix size for the requested embedding."""


class ParseError(WedgeError, ValueError):
    """Malformed JSON or textual input.

    ``position`` is either a character offset into the input or a
    dotted path (``terms[2].partition``) to the offending value.
    """

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at {position})")
        self.message = message
        self.position = position
