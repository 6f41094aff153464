"""Exception hierarchy for hypertree validation, codecs and file parsing."""

from __future__ import annotations


class HypertreeError(ValueError):
    """Base class for all domain errors raised by this package."""


class EdgeTooSmall(HypertreeError):
    """A hyperedge has fewer than two vertices."""


class Disconnected(HypertreeError):
    """The hypergraph is not connected."""


class NotATree(HypertreeError):
    """The hypergraph is connected but contains a cycle."""


class RootNotMax(HypertreeError):
    """The declared root is not the largest vertex id."""


class UnknownVertex(HypertreeError):
    """A queried vertex does not belong to the tree."""


class NotIdempotent(HypertreeError):
    """A candidate partition map is not idempotent."""


class NotLowering(HypertreeError):
    """A candidate partition map does not satisfy p(x) <= x."""


class NotConstantOnPart(HypertreeError):
    """A candidate glue map takes several values on one partition part."""


class NotEventuallyRoot(HypertreeError):
    """Iterating a candidate glue map never reaches the root."""


class NotAnEdge(HypertreeError):
    """A marked hyperedge does not belong to the tree it is checked against."""


class LengthMismatch(HypertreeError):
    """A code word does not have length (number of parts) - 1."""


class LetterOutOfRange(HypertreeError):
    """A code word contains a letter outside the vertex set."""


class OutOfRange(HypertreeError):
    """A numeric argument is outside the supported range."""


class NotAPermutation(HypertreeError):
    """A sequence of values is not a permutation of 1..n."""


class CompositionMismatch(HypertreeError):
    """An ideal pair violates g = g o p."""


class DepthTooSmall(HypertreeError):
    """A halfline truncation depth is smaller than the permutation bound."""


class NoStabilization(HypertreeError):
    """Halfline truncations failed to stabilize below the depth ceiling."""


class ParseError(HypertreeError):
    """A text file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
