"""Exception types shared across the package."""


class InfodistError(Exception):
    """Base class for all package-specific errors."""


class NetworkFormatError(InfodistError):
    """Malformed network description; ``field`` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class CycleDetected(NetworkFormatError):
    """The graph is not acyclic; carries one back edge."""

    def __init__(self, edge):
        super().__init__(f"graph contains a cycle through edge {edge}", field="edges")
        self.edge = edge


class DuplicateEdge(NetworkFormatError):
    def __init__(self, edge):
        super().__init__(f"duplicate edge triple {edge}", field="edges")
        self.edge = edge


class SourceHasInEdge(NetworkFormatError):
    def __init__(self, session, node):
        super().__init__(
            f"source {node!r} of session {session} has incoming edges", field="sessions"
        )
        self.session = session


class SinkHasOutEdge(NetworkFormatError):
    def __init__(self, session, node):
        super().__init__(
            f"sink {node!r} of session {session} has outgoing edges", field="sessions"
        )
        self.session = session


class CutNotSaturable(InfodistError):
    """The supplied edge set is not a minimum cut-set between the endpoints."""


class PermutationMismatch(InfodistError):
    """A permutation sequence does not order exactly the cut-set sequence."""


class BijectionViolated(InfodistError):
    """A path misses its session cut-set or crosses it more than once."""

    def __init__(self, session, path, crossed):
        super().__init__(
            f"path {path} of session {session} crosses its cut-set in {sorted(crossed)}"
        )
        self.session = session
        self.path = path
        self.crossed = crossed


class NotExtendable(InfodistError):
    """Representatives were requested for a non-extendable path-set sequence."""


class PathEnumerationTruncated(InfodistError):
    """Path enumeration hit its cap; dependent results are indeterminate."""

    def __init__(self, u, v, limit):
        super().__init__(f"more than {limit} simple paths from {u!r} to {v!r}")
        self.limit = limit


class MissingEncoder(InfodistError):
    def __init__(self, edge):
        super().__init__(f"no local encoder given for edge {edge}")
        self.edge = edge


class FieldTooSmall(InfodistError):
    pass


class WitnessInvalid(InfodistError):
    """A witness failed re-verification against its network."""


class UnknownPath(InfodistError):
    """A routing scheme keys a path that is not a valid session path."""

    def __init__(self, session, path):
        super().__init__(f"path {path} is not a valid path for session {session}")
        self.session = session
        self.path = path


class NotACutset(InfodistError):
    pass


class DeadlineTooSmall(InfodistError):
    def __init__(self, tau, best):
        msg = f"deadline {tau} below the fastest source-sink delay"
        if best is not None:
            msg += f" ({best})"
        super().__init__(msg)
        self.tau = tau
        self.best = best
