"""Exception hierarchy shared by every argex module."""


class ArgexError(Exception):
    """Base class for all argex errors."""


class ParseError(ArgexError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UndeclaredArgument(ParseError):
    """An attack mentions an argument that was never declared."""


class UnknownArgument(ArgexError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class InvalidFramework(ArgexError, ValueError):
    pass


class InvalidQuery(ArgexError, ValueError):
    """A query combines options that do not make sense together."""


class NoExtensions(ArgexError):
    """The semantics yields no extensions, so acceptance is undefined."""


class StatusMismatch(ArgexError):
    """The argument's acceptance status does not match the requested mode."""


class InvalidPath(ArgexError, ValueError):
    pass


class SelfAttacker(ArgexError):
    """Non-acceptance sufficiency is undefined for self-attacking arguments."""


class TooLarge(ArgexError):
    """The instance exceeds the size cap of an exhaustive routine."""


class InvalidConfig(ArgexError, ValueError):
    pass
