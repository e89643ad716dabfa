"""Exception hierarchy shared across the package."""


class LeafBendError(Exception):
    """Base class for every error raised by leafbend."""


class DomainError(LeafBendError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class GeometryError(LeafBendError):
    """A construction degenerated (e.g. a zero-length chord)."""


class NonMonotoneError(LeafBendError):
    """The projected coordinate reverses direction, so no inverse exists.

    ``interval`` is the arc-length interval ``(s_a, s_b)`` of the first
    knot pair whose direction disagrees with the first one.
    """

    def __init__(self, interval, message=None):
        self.interval = (float(interval[0]), float(interval[1]))
        if message is None:
            message = (
                "projection folds: u reverses direction on s in "
                f"[{self.interval[0]:.9g}, {self.interval[1]:.9g}]"
            )
        super().__init__(message)


class OutOfDomainError(LeafBendError, ValueError):
    """A lookup-table query falls outside the tabulated range."""

    def __init__(self, query, domain):
        self.query = query
        self.domain = (float(domain[0]), float(domain[1]))
        super().__init__(
            f"query {query!r} outside [{self.domain[0]:.9g}, {self.domain[1]:.9g}]"
        )


class FormatError(LeafBendError, ValueError):
    """Malformed or unsupported file contents."""
