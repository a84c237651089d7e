"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by chordline."""


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyGraphError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class CompleteGraphError(GraphError):
    pass


class NotChordalError(GraphError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"graph is not chordal; chordless cycle {list(self.cycle)}")


class EdgelessInputError(GraphError):
    pass


class NotLineGraphError(GraphError):
    def __init__(self, message, claw=None):
        self.claw = claw
        super().__init__(message)


class NotHatImageError(GraphError):
    pass


class NotChordalLineError(GraphError):
    def __init__(self, message, component=None, reason=None):
        self.component = component
        self.reason = reason
        super().__init__(message)


class NotInUError(GraphError):
    """The triple does not lie in exactly one maximal clique."""


class StructuralViolation(GraphError):
    """A cone fails the case dichotomy required by the canonisation recursion."""


class NoCandidatesError(GraphError):
    pass


class TooLargeError(GraphError):
    pass
