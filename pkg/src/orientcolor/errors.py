"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph text. ``line`` is 1-based, or None when not tied to a line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(RuntimeError):
    """A configured enumeration, term or evaluation bound would be exceeded."""


class CrossCheckFailure(AssertionError):
    """Two independent routes disagreed."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())
