"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class NotATree(GraphError):
    pass


class ColoringError(ValueError):
    pass


class IncompleteColoring(ColoringError):
    pass


class GapInColors(ColoringError):
    pass


class NotAPermutation(ColoringError):
    pass


class NotGrundyValid(ColoringError):
    pass


class SearchLimitExceeded(RuntimeError):
    def __init__(self, n, limit):
        super().__init__(f"graph has {n} vertices, search limit is {limit}")
        self.n = n
        self.limit = limit


class BadParameters(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class NoWitnessFound(LookupError):
    pass


class CertificateCheckFailed(AssertionError):
    """A recoloring procedure produced something that is not a b-coloring.

    ``stage`` names the pipeline stage that was last executed and ``trace``
    holds the action log up to the failure.
    """

    def __init__(self, message, stage=None, trace=()):
        super().__init__(f"[{stage}] {message}" if stage else message)
        self.stage = stage
        self.trace = tuple(trace)


class ParseError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class UnknownSuite(KeyError):
    pass
