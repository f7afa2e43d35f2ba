"""Exception types raised across the package.

All of them derive from ``ValueError`` so callers that only care about
"bad input" can catch a single class.
"""


class NotABijection(ValueError):
    """A one-line word is not a permutation of 1..n."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class LengthMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Malformed permutation, pattern or chain text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnsupportedChain(ValueError):
    """No structural generator or closed form is known for the chain."""


class DomainError(ValueError):
    """Argument lies outside the range where a formula is defined."""


class NotInTrichotomy(ValueError):
    pass


class NotUnimodal(ValueError):
    pass
