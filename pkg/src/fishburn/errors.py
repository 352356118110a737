"""Exception types raised by validation and by the partial bijections.

All are recoverable: the CLI catches :class:`FishburnError` and exits
with status 2 instead of crashing.
"""


class FishburnError(Exception):
    """Base class for all domain errors in this package."""


class InvalidObject(FishburnError):
    """Base class for validation failures of any object class."""


# -- matchings ----------------------------------------------------------

class DuplicateEndpoint(InvalidObject):
    """An endpoint value occurs more than once among the arcs."""


class EndpointOutOfRange(InvalidObject):
    """An endpoint is not in {1, ..., 2n}."""


class NotAPerfectMatching(InvalidObject):
    """Input is not a collection of disjoint integer pairs covering [2n]."""


# -- inversion tables and permutations ----------------------------------

class EntryOutOfRange(InvalidObject):
    """Inversion-table entry a_i outside [0, i-1]."""


class NotAPermutation(InvalidObject):
    """Sequence is not a rearrangement of 1..n."""


# -- posets --------------------------------------------------------------

class NotAPartialOrder(InvalidObject):
    """Relation is reflexive or contains a cycle."""


class NotFactorial(FishburnError):
    """Operation requires a factorial poset."""


class NotTwoPlusTwoFree(FishburnError):
    """Operation requires a poset with no induced two-plus-two."""


# -- triangular matrices --------------------------------------------------

class NotUpperTriangular(InvalidObject):
    """A nonzero entry lies below the diagonal."""


class NegativeEntry(InvalidObject):
    """Matrix entry is negative."""


class ZeroRowOrColumn(InvalidObject):
    """Some row or column is all zeros."""


class InvalidMatrix(InvalidObject):
    """Rows do not form a square integer matrix."""


class NotZeroOne(FishburnError):
    """Operation requires a matrix with entries in {0, 1}."""


# -- restricted bijection domains ----------------------------------------

class HasLeftNesting(FishburnError):
    """Matching has a left-nesting; the offending arc pair is attached.

    ``exc.arcs`` holds ((i, l), (j, k)) with i < j = i + 1 < k < l.
    """

    def __init__(self, arcs):
        self.arcs = arcs
        super().__init__(f"matching has a left-nesting: arcs {arcs[0]} and {arcs[1]}")


class HasLeftCrossing(FishburnError):
    """Matching has a left-crossing; the offending arc pair is attached."""

    def __init__(self, arcs):
        self.arcs = arcs
        super().__init__(f"matching has a left-crossing: arcs {arcs[0]} and {arcs[1]}")


# -- registries -----------------------------------------------------------

class UnknownPredicate(FishburnError):
    """Predicate name not in the filter registry."""


class UnknownStatistic(FishburnError):
    """Statistic name not defined for the object class."""


class UnknownCheck(FishburnError):
    """Check name not in the verification registry."""


class UnknownClass(FishburnError):
    """Object-class name not recognized."""
