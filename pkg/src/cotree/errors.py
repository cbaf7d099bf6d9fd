"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CotreeError(Exception):
    """Base class for every error raised by this package."""


class GraphBuildError(CotreeError, ValueError):
    """Input rotation system does not describe a valid rooted plane graph."""


class NonSymmetricAdjacency(GraphBuildError):
    pass


class VertexOutOfRange(GraphBuildError):
    pass


class ParallelOrLoopEdge(GraphBuildError):
    pass


class EulerViolation(GraphBuildError):
    pass


class OuterFaceNotFound(GraphBuildError):
    pass


class BadRoots(GraphBuildError):
    pass


class TooLargeForBruteCheck(CotreeError):
    pass


class TooLarge(CotreeError):
    pass


class NotThreeConnected(CotreeError):
    pass


class AugmentationNotThreeConnected(CotreeError):
    pass


class InternalInvariantBroken(CotreeError, AssertionError):
    """A construction produced an object that fails its own invariant.

    Signals a bug upstream rather than bad user input.
    """


class NotASpanningTree(CotreeError, ValueError):
    pass


class PreconditionDegree(CotreeError, ValueError):
    pass


class BadParams(CotreeError, ValueError):
    pass
