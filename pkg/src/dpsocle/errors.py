"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class DpsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(DpsError, ValueError):
    """Malformed or out-of-domain arguments (CLI exit code 2)."""


class UnsupportedParameter(DpsError, ValueError):
    """A parameter outside the supported class, e.g. a non-integral infinitesimal character."""


class HypothesisNotMet(DpsError):
    """The hypothesis of a socle theorem fails; no report is produced for it."""


class LimitExceeded(DpsError):
    """A configured enumeration limit would be exceeded (CLI exit code 3)."""
