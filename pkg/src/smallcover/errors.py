"""Exception types shared across the package.

Every validation failure raises a distinct class so that callers (and the
command line driver) can map failures to stable exit codes.
"""

__all__ = [
    "SmallCoverError",
    "PolytopeError",
    "MalformedFacet",
    "UnknownVertex",
    "NonSimple",
    "BadEdge",
    "EulerViolation",
    "DisconnectedSkeleton",
    "NotHamiltonian",
    "CharFunError",
    "ZeroVector",
    "StarViolation",
    "ZeroFunctional",
    "NotOrientable",
    "NotOrientableImage",
    "SideColoringConflict",
    "NotInSubgroup",
    "InternalInvariantBreach",
    "EdgeNotInCycle",
    "BipartitenessBreach",
    "AlternationFailure",
    "MalformedPD",
]


class SmallCoverError(Exception):
    """Base class for all package errors."""


class PolytopeError(SmallCoverError):
    """Base class for combinatorial polytope validation failures."""


class MalformedFacet(PolytopeError):
    """A facet cycle is too short, repeats a vertex, or holds a bad entry."""


class UnknownVertex(PolytopeError):
    """An operation referenced a vertex id that is not present."""


class NonSimple(PolytopeError):
    """Some vertex does not lie in exactly three facets."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"vertices not in exactly 3 facets: {self.vertices}")


class BadEdge(PolytopeError):
    """An edge is not shared by exactly two facets with opposite traversal."""


class EulerViolation(PolytopeError):
    """V - E + F differs from 2."""


class DisconnectedSkeleton(PolytopeError):
    """The edge graph is not connected."""


class NotHamiltonian(PolytopeError):
    """A supplied cycle is not a Hamiltonian cycle of the polytope."""


class CharFunError(SmallCoverError):
    """Base class for characteristic function failures."""


class ZeroVector(CharFunError):
    """A facet was assigned the zero vector."""


class StarViolation(CharFunError):
    """Some vertex sees a linearly dependent triple of facet vectors."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"dependent facet vectors at vertices: {self.vertices}")


class ZeroFunctional(CharFunError):
    """The zero functional has no orientation kernel."""


class NotOrientable(CharFunError):
    """No functional evaluates to 1 on every facet vector."""


class NotOrientableImage(CharFunError):
    """The image of the function is not one of the two orientable shapes."""


class SideColoringConflict(CharFunError):
    """A cycle did not split the facets into two 2-colorable sides."""


class NotInSubgroup(SmallCoverError):
    """The requested involution is not a nonzero kernel element."""


class InternalInvariantBreach(SmallCoverError):
    """A derived structure violated an invariant that should always hold."""


class EdgeNotInCycle(SmallCoverError):
    """The requested cut edge does not belong to the cycle."""


class BipartitenessBreach(SmallCoverError):
    """Two same-side chords interleave; upstream data is corrupt."""


class AlternationFailure(SmallCoverError):
    """No over/under assignment made the diagram alternating."""


class MalformedPD(SmallCoverError):
    """A PD code is structurally inconsistent."""
