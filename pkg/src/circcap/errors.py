"""Exception hierarchy shared by the library and the CLI."""


class CirccapError(Exception):
    """Base class for all errors raised by circcap."""


class ParameterError(CirccapError, ValueError):
    """Inputs violate a type invariant or disagree on (n, d)."""


class LetterRangeError(ParameterError):
    """A letter map produced a value outside the target alphabet."""

    def __init__(self, letter, image, modulus):
        super().__init__(
            f"letter {letter} maps to {image}, outside [0, {modulus - 1}]"
        )
        self.letter = letter
        self.image = image
        self.modulus = modulus


class PreconditionError(CirccapError):
    """An operation was called on input it is not defined for."""


class CodeFormatError(CirccapError, ValueError):
    """A code file could not be parsed."""

    def __init__(self, message, lineno=None):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno
