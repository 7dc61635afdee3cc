"""Exception hierarchy shared by every module of the package."""


class AbductionError(Exception):
    """Base class for all errors raised by this package."""


class EmptyManifestationSet(AbductionError):
    pass


class UnsupportedWidth(AbductionError):
    pass


class UnknownAtom(AbductionError):
    pass


class InvalidProblem(AbductionError):
    pass


class InvalidGiven(AbductionError):
    pass


class WrongGadget(AbductionError):
    pass


class WidthExceeded(AbductionError):
    pass


class CannotShrink(AbductionError):
    pass


class UniverseTooLarge(AbductionError):
    pass


class TooManyHypotheses(AbductionError):
    pass


class ParseError(AbductionError):
    """Malformed instance text; ``line`` is 1-based, or None for global errors."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
