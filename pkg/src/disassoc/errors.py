"""Exception types shared across the package."""


class DisassocError(Exception):
    """Base class for package errors."""


class DataError(DisassocError):
    """Unusable input data: unreadable files, empty datasets, bad pools."""


class InfeasibleEnumerationError(DisassocError):
    """Reconstruction enumeration refused because it would exceed the limit."""

    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(
            f"reconstruction enumeration would produce {count} alignments, "
            f"above the limit of {limit}"
        )
