"""Root of the glvar exception hierarchy."""


class GlvarError(Exception):
    """Base exception for every error raised by glvar.

    Each subpackage derives its own errors from this class so callers can
    catch everything glvar raises with a single ``except`` clause.

    Example:
        >>> from glvar.exceptions import GlvarError
        >>> try:
        ...     raise GlvarError("boom")
        ... except GlvarError as e:
        ...     print(e)
        boom

    """

    pass
