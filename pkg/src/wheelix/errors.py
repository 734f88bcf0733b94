"""Exception types shared across the package."""


class WheelixError(Exception):
    """Base class for all wheelix errors."""


class FormatError(WheelixError):
    """Malformed text input (automaton, order, or index file)."""

    def __init__(self, message, line=None, col=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.col = col


class InvalidAutomaton(WheelixError):
    """Structurally invalid automaton (multiple sources, unreachable state, ...)."""


class UnknownSymbol(WheelixError):
    """A query word uses a symbol outside the automaton's alphabet."""


class NotInputConsistent(WheelixError):
    """Some state receives two distinct incoming labels."""

    def __init__(self, state, first_label, second_label):
        super().__init__(
            f"state {state} has incoming labels {first_label!r} and {second_label!r}"
        )
        self.state = state
        self.labels = (first_label, second_label)


class NotDeterministic(WheelixError):
    """Operation requires a DFA but the automaton has equally-labeled siblings."""


class CyclicError(WheelixError):
    """Operation requires an acyclic automaton but a directed cycle exists."""


class TooLarge(WheelixError):
    """Input exceeds the size limit of a brute-force oracle."""


class DegreeTooHigh(WheelixError):
    """Nondeterminism degree above what the recognizer supports."""

    def __init__(self, degree):
        super().__init__(f"nondeterminism degree {degree} > 2 is unsupported")
        self.degree = degree


class SortFailed(WheelixError):
    """Sorting found the automaton non-sortable; `kind` says why."""

    KINDS = ("input-consistency", "type1", "type2", "cycle", "not-wheeler")

    def __init__(self, kind, detail=""):
        assert kind in self.KINDS
        super().__init__(f"NOT-WHEELER({kind})" + (f": {detail}" if detail else ""))
        self.kind = kind


class NotWheeler(WheelixError):
    """A supplied node order does not satisfy the Wheeler properties."""


class IntervalViolation(WheelixError):
    """Determinization reached a state set that is not contiguous in rank."""


class OutputLimitExceeded(WheelixError):
    """Conversion output grew past the configured state limit."""


class InternalError(WheelixError):
    """An internal consistency check failed; indicates a bug, not bad input."""
