"""Exception types shared across the package."""


class RootSystemError(ValueError):
    """Base class for every domain error raised by this package."""


class InvalidParams(RootSystemError):
    """System parameters violate a >= b >= 1 or a*b >= 4."""


class InvalidIndex(RootSystemError):
    """An index or bound argument lies outside its documented domain."""


class NotRealMirror(RootSystemError):
    """Reflection requested in a vector that is not a real root."""


class NotRealRoot(RootSystemError):
    """A vector or literal that must denote a real root does not."""


class LiteralSyntaxError(RootSystemError):
    """A root literal does not match FAMILY:INT or INT,INT."""


class EmptyGenerators(RootSystemError):
    """Subsystem operations need at least one generator."""


class DegenerateSum(RootSystemError):
    """alpha + beta = 0 where a nonzero sum is required."""


class PreconditionFailed(RootSystemError):
    """A documented precondition was violated (e.g. the sum is not real)."""
