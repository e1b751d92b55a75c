"""Exception types raised by the stochdom library and CLI."""


class StochDomError(Exception):
    """Base class for all stochdom errors."""


class BadArgument(StochDomError, ValueError):
    """An argument violates an operation's preconditions."""


class DegenerateSupport(StochDomError, ValueError):
    """The pooled sample support has zero width, so no grid can be built."""


class NonPositivePrice(StochDomError, ValueError):
    """A price series contains a value <= 0, so log returns are undefined."""


class LengthMismatch(StochDomError, ValueError):
    """Paired resampling requires both samples to have the same length."""


class MissingSubsampleSize(StochDomError, ValueError):
    """A subsampling plan was requested without block sizes b1/b2."""


class ConfigError(StochDomError, ValueError):
    """Inconsistent or unknown configuration flags."""


class ParseError(StochDomError, ValueError):
    """A CSV cell could not be parsed; the message carries its location."""


class GroupArity(StochDomError, ValueError):
    """A group column used to split the sample does not have exactly 2 levels."""
