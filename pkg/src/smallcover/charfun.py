"""Characteristic functions: facet labelings by nonzero vectors of GF(2)^3.

Vectors are packed into the integers 0..7 with basis e1 = 1, e2 = 2, e3 = 4,
so addition is xor and the canonical order of vectors is plain integer order.
A labeling is admissible when the three vectors at every vertex are linearly
independent.  Functionals use the same packing; evaluation is the parity of
the bitwise and.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    NotHamiltonian,
    NotInSubgroup,
    NotOrientableImage,
    SideColoringConflict,
    StarViolation,
    ZeroFunctional,
    ZeroVector,
)
from .polytope import Cycle, SimplePolytope3, is_hamiltonian_cycle

__all__ = [
    "E1",
    "E2",
    "E3",
    "dot",
    "independent_triple",
    "CharacteristicFunction",
    "validate_star",
    "star_violations",
    "orientability",
    "OrientationSubgroup",
    "orientation_subgroup",
    "ImageClass",
    "classify_image",
    "canonicalize",
    "same_orbit",
    "enumerate_characteristic_functions",
    "coloring_from_hamiltonian",
    "involution_name",
]

E1, E2, E3 = 1, 2, 4


def dot(xi: int, v: int) -> int:
    """Evaluate the functional xi on the vector v (both packed)."""
    return bin(xi & v).count("1") & 1


def independent_triple(a: int, b: int, c: int) -> bool:
    """True when a, b, c span GF(2)^3."""
    return 0 not in (a, b, c) and len({a, b, c}) == 3 and a ^ b ^ c != 0


@dataclass(frozen=True)
class CharacteristicFunction:
    """Facet labels, one packed vector per facet in facet order."""

    values: tuple[int, ...]

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def __getitem__(self, facet: int) -> int:
        return self.values[facet]

    def __len__(self) -> int:
        return len(self.values)


def _coerce_values(
    P: SimplePolytope3, values: Sequence[int] | CharacteristicFunction
) -> tuple[int, ...]:
    if isinstance(values, CharacteristicFunction):
        values = values.values
    vals = tuple(values)
    if len(vals) != P.facet_count:
        raise ValueError(
            f"got {len(vals)} labels for {P.facet_count} facets"
        )
    for i, v in enumerate(vals):
        if type(v) is not int or not 0 <= v <= 7:
            raise ValueError(f"facet {i} label {v!r} is not in 0..7")
        if v == 0:
            raise ZeroVector(f"facet {i} is labeled with the zero vector")
    return vals


def star_violations(
    P: SimplePolytope3, values: Sequence[int] | CharacteristicFunction
) -> list[int]:
    """Vertices whose three facet vectors are dependent."""
    vals = _coerce_values(P, values)
    return [
        v
        for v in range(P.vertex_count)
        if not independent_triple(*(vals[f] for f in P.vertex_facets[v]))
    ]


def validate_star(
    P: SimplePolytope3, values: Sequence[int] | CharacteristicFunction
) -> CharacteristicFunction:
    """Check admissibility at every vertex and wrap the labels."""
    vals = _coerce_values(P, values)
    bad = star_violations(P, vals)
    if bad:
        raise StarViolation(bad)
    return CharacteristicFunction(vals)


# -- orientability --------------------------------------------------------


def orientability(
    P: SimplePolytope3, cf: CharacteristicFunction
) -> Optional[int]:
    """The functional with xi(lambda_i) = 1 for every facet, or None.

    Only the image matters, and eight candidates exist, so the solver scans
    them in increasing packed order; the first hit is the lexicographically
    smallest solution, and for admissible labelings (whose image spans) it
    is unique.
    """
    return _solve_xi(cf.values if isinstance(cf, CharacteristicFunction) else cf)


def _solve_xi(values: Iterable[int]) -> Optional[int]:
    image = set(values)
    for xi in range(1, 8):
        if all(dot(xi, v) for v in image):
            return xi
    return None


@dataclass(frozen=True)
class OrientationSubgroup:
    """The kernel of the orientation functional."""

    xi: int
    elements: tuple[int, int, int, int]

    @property
    def involutions(self) -> tuple[int, int, int]:
        return self.elements[1:]


def orientation_subgroup(xi: int) -> OrientationSubgroup:
    """Kernel of xi: the identity and three involutions, in packed order."""
    if xi == 0:
        raise ZeroFunctional("the zero functional does not orient anything")
    kernel = tuple(v for v in range(8) if dot(xi, v) == 0)
    return OrientationSubgroup(xi=xi, elements=kernel)


class ImageClass(enum.Enum):
    THREE_COLORING = "ThreeColoring"
    FOUR_COLORING = "FourColoring"


def classify_image(cf: CharacteristicFunction) -> ImageClass:
    """Sort an orientable labeling by its image size (3 or 4)."""
    image = set(cf.values)
    if _solve_xi(image) is None:
        raise NotOrientableImage(
            f"image {sorted(image)} admits no orientation functional"
        )
    if len(image) == 3:
        return ImageClass.THREE_COLORING
    if len(image) == 4:
        return ImageClass.FOUR_COLORING
    raise NotOrientableImage(
        f"orientable image must have 3 or 4 vectors, got {sorted(image)}"
    )


# -- orbit canonicalization ------------------------------------------------


def canonicalize(
    P: SimplePolytope3, cf: CharacteristicFunction
) -> tuple[CharacteristicFunction, tuple[int, int, int]]:
    """The unique orbit representative pinned at vertex 0, plus the map.

    Basis changes of GF(2)^3 act on labelings; the representative sends the
    three facets at vertex 0 (in index order) to e1, e2, e3.  Since those
    labels form a basis, exactly one group element does this, so equality of
    canonical forms decides orbit membership.  The returned matrix is packed
    as the images (M(e1), M(e2), M(e3)).
    """
    basis = tuple(cf.values[f] for f in P.vertex_facets[0])
    table = {0: 0}
    for code in range(1, 8):
        vec = 0
        for j in range(3):
            if code >> j & 1:
                vec ^= basis[j]
        table[vec] = code
    if len(table) != 8:
        raise StarViolation([0])
    matrix = (table[1], table[2], table[4])
    return CharacteristicFunction(
        tuple(table[v] for v in cf.values)
    ), matrix


def same_orbit(
    P: SimplePolytope3,
    a: CharacteristicFunction,
    b: CharacteristicFunction,
) -> bool:
    return canonicalize(P, a)[0] == canonicalize(P, b)[0]


def enumerate_characteristic_functions(
    P: SimplePolytope3, orientable_only: bool = False
) -> list[CharacteristicFunction]:
    """One admissible labeling per basis-change orbit, lexicographically.

    The three facets at vertex 0 are pinned to e1, e2, e3; every orbit holds
    exactly one labeling of that shape, so backtracking over the remaining
    facets with admissibility pruning enumerates orbit representatives with
    no duplicates.  Results are sorted by their value tuples.
    """
    m = P.facet_count
    f1, f2, f3 = P.vertex_facets[0]
    assign = [0] * m
    assign[f1], assign[f2], assign[f3] = E1, E2, E3
    order = [i for i in range(m) if i not in (f1, f2, f3)]
    pos = {f: idx for idx, f in enumerate(order)}
    trigger: list[list[int]] = [[] for _ in order]
    for v in range(P.vertex_count):
        ps = [pos[f] for f in P.vertex_facets[v] if f in pos]
        if ps:
            trigger[max(ps)].append(v)

    out: list[CharacteristicFunction] = []

    def place(idx: int) -> None:
        if idx == len(order):
            vals = tuple(assign)
            if not orientable_only or _solve_xi(vals) is not None:
                out.append(CharacteristicFunction(vals))
            return
        f = order[idx]
        for val in range(1, 8):
            assign[f] = val
            if all(
                independent_triple(*(assign[x] for x in P.vertex_facets[v]))
                for v in trigger[idx]
            ):
                place(idx + 1)
        assign[f] = 0

    place(0)
    return out


# -- colorings from Hamiltonian cycles --------------------------------------


def coloring_from_hamiltonian(
    P: SimplePolytope3, cycle: Cycle | Sequence[int]
) -> CharacteristicFunction:
    """The regular 4-coloring induced by a Hamiltonian cycle.

    The cycle splits the facets into two sides; facets sharing a non-cycle
    edge sit on the same side and must alternate colors there.  The side
    holding facet 0 is colored from {e1, e2} with facet 0 getting e1; the
    other side is colored from {e3, e1+e2+e3} with its smallest facet
    getting e3.  Colors spread breadth-first over shared non-cycle edges.
    The involution e1+e2 then recovers the input cycle as its 2-factor.
    """
    vertices = cycle.vertices if isinstance(cycle, Cycle) else tuple(cycle)
    if not is_hamiltonian_cycle(P, vertices):
        raise NotHamiltonian(f"{vertices} is not a Hamiltonian cycle")
    on_cycle = set(Cycle(vertices).edges())
    neighbors: dict[int, list[int]] = {i: [] for i in range(P.facet_count)}
    for e, (a, b) in P.edge_facets.items():
        if e not in on_cycle:
            neighbors[a].append(b)
            neighbors[b].append(a)

    color = [0] * P.facet_count
    seen: set[int] = set()
    sides = []
    for start in range(P.facet_count):
        if start in seen:
            continue
        pair = (E1, E2) if not sides else (E3, E1 ^ E2 ^ E3)
        sides.append(start)
        if len(sides) > 2:
            raise SideColoringConflict(
                "cycle leaves more than two facet components"
            )
        color[start] = pair[0]
        seen.add(start)
        queue = [start]
        while queue:
            f = queue.pop(0)
            flipped = pair[1] if color[f] == pair[0] else pair[0]
            for g in sorted(neighbors[f]):
                if g in seen:
                    if color[g] != flipped:
                        raise SideColoringConflict(
                            f"facets {f} and {g} cannot alternate colors"
                        )
                    continue
                color[g] = flipped
                seen.add(g)
                queue.append(g)
    if len(sides) != 2:
        raise SideColoringConflict("cycle leaves fewer than two sides")
    return CharacteristicFunction(tuple(color))


def involution_name(
    P: SimplePolytope3, cf: CharacteristicFunction, g: int
) -> str:
    """Express g as a sum of two of the basis labels at vertex 0."""
    b = tuple(cf.values[f] for f in P.vertex_facets[0])
    for i in range(3):
        for j in range(i + 1, 3):
            if b[i] ^ b[j] == g:
                return f"λ{i + 1}+λ{j + 1}"
    raise NotInSubgroup(
        f"{g} is not a sum of two facet labels at vertex 0"
    )
