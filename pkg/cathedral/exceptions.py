"""
Exception hierarchy for the cathedral package.

Every error raised by the library derives from CathedralError so callers
(and the CLI) can separate library failures from programming errors.
"""

from typing import Any, Optional


class CathedralError(Exception):
    """Base class for all library errors."""


# Input validation

class GraftError(CathedralError, ValueError):
    """A graph or graft failed validation."""


class DuplicateLabel(GraftError):
    pass


class DuplicateEdge(GraftError):
    pass


class UnknownEndpoint(GraftError):
    pass


class LoopEdge(GraftError):
    pass


class UnknownVertex(GraftError):
    pass


class OverlappingSets(GraftError):
    pass


class ForeignEdgeId(GraftError):
    pass


class LabelCollision(GraftError):
    pass


class OddTerminalComponent(GraftError):
    """A connected component holds an odd number of terminals."""

    def __init__(self, component):
        self.component = tuple(sorted(component))
        super().__init__(
            f"Component {list(self.component)} contains an odd number of terminals"
        )


# Joins

class JoinError(CathedralError):
    pass


class TooLarge(JoinError):
    pass


class NoJoinExists(JoinError):
    pass


class NotMinimumJoin(JoinError):
    pass


# Distances

class DistanceError(CathedralError):
    pass


class SameVertex(DistanceError):
    pass


class Disconnected(DistanceError):
    pass


class NotPrimal(DistanceError):
    pass


class NotInA(DistanceError):
    pass


# Structure

class StructureError(CathedralError):
    pass


class NotExtreme(StructureError):
    pass


class NotMaximalExtreme(StructureError):
    pass


class NotCombic(StructureError):
    pass


class IllegalAttachment(StructureError):
    pass


# Decomposition and synthesis

class DecompositionError(CathedralError):
    pass


class CombicViolation(DecompositionError):
    pass


class NotComb(DecompositionError):
    pass


class ToothNotPrimal(DecompositionError):
    pass


class BadAttachment(DecompositionError):
    pass


class ContractionMismatch(DecompositionError):
    pass


class TerminalRuleViolation(DecompositionError):
    pass


class TheoremViolation(CathedralError):
    """
    A lemma or theorem that an operation asserts did not hold.

    Args:
        prop: Short name of the violated property
        detail: Human readable description
        witness: Optional structured witness (vertex, edge set, ...)
    """

    def __init__(self, prop: str, detail: str, witness: Optional[Any] = None):
        self.prop = prop
        self.detail = detail
        self.witness = witness
        super().__init__(f"{prop}: {detail}")


# Command line and documents

class ParseError(CathedralError):
    pass


class DocumentValidationError(CathedralError):
    pass


class InfeasibleParameters(CathedralError):
    pass


class UnknownSuite(CathedralError):
    pass
