"""Exception classes shared across the toolkit.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat:
a failure is either bad input data (file content), a bad parameter, or a
degenerate signal that cannot carry a watermark.
"""


class EntromarkError(Exception):
    """Base class for all toolkit errors."""


class FormatError(EntromarkError):
    """A file (image, bitmap, or key) does not conform to its format."""


class ParameterError(EntromarkError):
    """An argument violates an operation's contract."""


class DegenerateSubbandError(EntromarkError):
    """The chosen subband is all zero; its statistics are undefined."""
