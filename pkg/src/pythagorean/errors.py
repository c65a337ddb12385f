"""Exception hierarchy shared by every module."""


class PythagoreanError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidSample(PythagoreanError):
    pass


class DomainError(PythagoreanError):
    """A transform or formula was applied outside its domain."""


class InvalidArgument(PythagoreanError):
    pass


class InvalidBasket(PythagoreanError):
    pass


class DegenerateCloud(PythagoreanError):
    pass


class ParseError(PythagoreanError):
    """Malformed input file. ``line`` is 1-based and counts the header."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f"{':' if where else 'line '}{line}"
        super().__init__(f"{where}: {message}" if where else message)
