"""Exception types shared across the pipeline."""


class DataError(Exception):
    """Malformed or inconsistent input data (files, tables, volumes)."""


class SvolFormatError(DataError):
    """An SVOL file violates the format specification."""


class NumericalError(Exception):
    """A numerical routine received or produced non-finite values."""
