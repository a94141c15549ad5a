"""Chord diagrams of Hamiltonian cycles and their chainmail link diagrams.

Cutting one edge of a Hamiltonian cycle gives a linear order 1..2l on the
vertices; the remaining (non-cycle) edges become chords.  Chords on the same
side of the cycle never interleave, so the interleaving graph is bipartite.
The chainmail link replaces every chord by an unknotted ring and every
interleaving pair by a clasp of two crossings; the over/under assignment is
chosen to make the whole diagram alternating.

Ring layout: the chord (i, j) is a flat ring spanning the axis interval
[i, j], with a strictly comparable height per ring (longer spans sit taller,
ties broken by the left endpoint).  Exactly one end of the taller ring of an
interleaving pair lies inside the shorter ring's interval; that end pierces
the shorter ring's top and bottom edges, giving the clasp's two crossings.
Nested and disjoint rings never touch.  Each ring is traversed left to right
along its top edge first, then down the right end, back along the bottom,
and up the left end; arcs are numbered by a global counter, components in
chord order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    AlternationFailure,
    BipartitenessBreach,
    EdgeNotInCycle,
    InternalInvariantBreach,
    MalformedPD,
    NotHamiltonian,
)
from .polytope import Cycle, SimplePolytope3, is_hamiltonian_cycle

__all__ = [
    "LinearChordDiagram",
    "chord_diagram",
    "interleave",
    "IntersectionGraph",
    "intersection_graph",
    "linking_matrix_from_graph",
    "LinkDiagram",
    "chainmail_diagram",
    "verify_alternating",
    "render_chord_diagram",
    "render_pd",
    "render_gauss",
    "intersection_graph_dot",
]

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- linear chord diagrams -------------------------------------------------


@dataclass(frozen=True)
class LinearChordDiagram:
    """A Hamiltonian path order with the non-cycle edges as chords.

    path[p-1] is the vertex at position p (positions are 1-based).  Chords
    are position pairs (i, j) with i < j, sorted; chord_edges holds the
    original polytope edge of each chord and sides its side letter.
    """

    path: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]
    chord_edges: tuple[Edge, ...]
    sides: tuple[str, ...]
    cut_edge: Edge


def chord_diagram(
    P: SimplePolytope3,
    C: Cycle | Sequence[int],
    cut_edge: Optional[Edge] = None,
    start: Optional[int] = None,
) -> LinearChordDiagram:
    """Linearize a Hamiltonian cycle by cutting one of its edges.

    The path starts at the cut edge endpoint with the smaller vertex id
    unless start names the other endpoint.  Side A is the side of the cycle
    holding facet 0; every chord's two facets sit on one side.
    """
    vertices = C.vertices if isinstance(C, Cycle) else tuple(C)
    if not is_hamiltonian_cycle(P, vertices):
        raise NotHamiltonian(f"{vertices} is not a Hamiltonian cycle")
    n = len(vertices)
    cycle_edges = set(Cycle(vertices).edges())
    if cut_edge is None:
        cut_edge = _edge(vertices[-1], vertices[0])
    else:
        cut_edge = _edge(*cut_edge)
        if cut_edge not in cycle_edges:
            raise EdgeNotInCycle(f"{cut_edge} is not an edge of the cycle")
    if start is None:
        start = cut_edge[0]
    elif start not in cut_edge:
        raise EdgeNotInCycle(f"{start} is not an endpoint of {cut_edge}")

    # Walk the cycle away from the cut edge, beginning at start.
    k = vertices.index(start)
    after = vertices[(k + 1) % n]
    step = -1 if _edge(start, after) == cut_edge else 1
    path = tuple(vertices[(k + step * t) % n] for t in range(n))

    position = {v: p + 1 for p, v in enumerate(path)}
    sides_of_facets = _facet_sides(P, cycle_edges)
    chords = []
    for e in P.edges:
        if e in cycle_edges:
            continue
        i, j = sorted((position[e[0]], position[e[1]]))
        fa, fb = P.edge_facets[e]
        if sides_of_facets[fa] != sides_of_facets[fb]:
            raise InternalInvariantBreach(
                f"chord {e} has facets on opposite sides"
            )
        chords.append(((i, j), e, sides_of_facets[fa]))
    chords.sort()
    if len(chords) != n // 2 or sorted(
        p for (i, j), _, _ in chords for p in (i, j)
    ) != list(range(1, n + 1)):
        raise InternalInvariantBreach("chords do not form a perfect matching")
    return LinearChordDiagram(
        path=path,
        chords=tuple(c[0] for c in chords),
        chord_edges=tuple(c[1] for c in chords),
        sides=tuple(c[2] for c in chords),
        cut_edge=cut_edge,
    )


def _facet_sides(
    P: SimplePolytope3, cycle_edges: set[Edge]
) -> dict[int, str]:
    # Facets sharing a non-cycle edge sit on the same side of the cycle.
    neighbors: dict[int, list[int]] = {i: [] for i in range(P.facet_count)}
    for e, (a, b) in P.edge_facets.items():
        if e not in cycle_edges:
            neighbors[a].append(b)
            neighbors[b].append(a)
    side: dict[int, str] = {}
    letters = iter("AB")
    for startf in range(P.facet_count):
        if startf in side:
            continue
        letter = next(letters, None)
        if letter is None:
            raise InternalInvariantBreach(
                "cycle leaves more than two facet components"
            )
        stack = [startf]
        side[startf] = letter
        while stack:
            f = stack.pop()
            for g in neighbors[f]:
                if g not in side:
                    side[g] = letter
                    stack.append(g)
    if len(set(side.values())) != 2:
        raise InternalInvariantBreach("cycle leaves fewer than two sides")
    return side


def interleave(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """True when the chords cross: i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1."""
    (i1, j1), (i2, j2) = c1, c2
    return i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1


# -- intersection graphs -----------------------------------------------------


@dataclass(frozen=True)
class IntersectionGraph:
    """Chords as vertices, interleavings as edges; bipartite by side."""

    chords: tuple[tuple[int, int], ...]
    chord_edges: tuple[Edge, ...]
    sides: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]


def intersection_graph(D: LinearChordDiagram) -> IntersectionGraph:
    edges = []
    for a in range(len(D.chords)):
        for b in range(a + 1, len(D.chords)):
            if interleave(D.chords[a], D.chords[b]):
                if D.sides[a] == D.sides[b]:
                    raise BipartitenessBreach(
                        f"same-side chords {D.chords[a]} and {D.chords[b]} "
                        "interleave"
                    )
                edges.append((a, b))
    return IntersectionGraph(
        chords=D.chords,
        chord_edges=D.chord_edges,
        sides=D.sides,
        edges=tuple(edges),
    )


def linking_matrix_from_graph(G: IntersectionGraph) -> list[list[int]]:
    """Unsigned prediction: |lk| is 1 on interleaving pairs, else 0."""
    n = len(G.chords)
    M = [[0] * n for _ in range(n)]
    for a, b in G.edges:
        M[a][b] = M[b][a] = 1
    return M


# -- chainmail diagrams ------------------------------------------------------


@dataclass(frozen=True)
class _Crossing:
    piercer: int
    pierced: int
    end: str  # "L" or "R": which end of the piercer
    edge: str  # "T" or "B": which edge of the pierced ring


_DIR_VEC = {"E": (1, 0), "S": (0, -1), "W": (-1, 0), "N": (0, 1)}
_CCW_NEXT = {"E": "N", "N": "W", "W": "S", "S": "E"}
_OPP = {"E": "W", "W": "E", "N": "S", "S": "N"}


@dataclass(frozen=True)
class ComponentInfo:
    chord: tuple[int, int]
    side: str
    arcs: tuple[int, ...]


@dataclass(frozen=True)
class CrossingInfo:
    over_chord: int
    under_chord: int
    sign: int
    pd: tuple[int, int, int, int]


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple[ComponentInfo, ...]
    crossings: tuple[CrossingInfo, ...]
    gauss: tuple[tuple[str, ...], ...]
    linking_matrix: tuple[tuple[int, ...], ...]

    @property
    def pd_code(self) -> list[tuple[int, int, int, int]]:
        return [c.pd for c in self.crossings]


def _height(chord: tuple[int, int]) -> tuple[int, int]:
    i, j = chord
    return (j - i, i)


def _ring_visits(
    chords: Sequence[tuple[int, int]],
    clasps: Sequence[tuple[int, int]],
) -> dict[int, list[tuple[_Crossing, str]]]:
    """Crossing visits per ring, in traversal order, with headings."""
    crossings: list[_Crossing] = []
    for a, b in clasps:
        t, s = (a, b) if _height(chords[a]) > _height(chords[b]) else (b, a)
        end = "L" if chords[s][0] < chords[t][0] < chords[s][1] else "R"
        for edge in ("T", "B"):
            crossings.append(_Crossing(t, s, end, edge))

    def hp(cr: _Crossing) -> tuple[int, int]:
        return _height(chords[cr.pierced])

    def endx(cr: _Crossing) -> int:
        return chords[cr.piercer][0 if cr.end == "L" else 1]

    visits: dict[int, list[tuple[_Crossing, str]]] = {}
    for c in range(len(chords)):
        top = sorted(
            (cr for cr in crossings if cr.pierced == c and cr.edge == "T"),
            key=endx,
        )
        right = sorted(
            (cr for cr in crossings if cr.piercer == c and cr.end == "R"),
            key=lambda cr: (
                (0, tuple(-x for x in hp(cr)))
                if cr.edge == "T"
                else (1, hp(cr))
            ),
        )
        bottom = sorted(
            (cr for cr in crossings if cr.pierced == c and cr.edge == "B"),
            key=endx,
            reverse=True,
        )
        left = sorted(
            (cr for cr in crossings if cr.piercer == c and cr.end == "L"),
            key=lambda cr: (
                (0, tuple(-x for x in hp(cr)))
                if cr.edge == "B"
                else (1, hp(cr))
            ),
        )
        visits[c] = (
            [(cr, "E") for cr in top]
            + [(cr, "S") for cr in right]
            + [(cr, "W") for cr in bottom]
            + [(cr, "N") for cr in left]
        )
    return visits


def chainmail_diagram(
    G: IntersectionGraph, D: LinearChordDiagram
) -> LinkDiagram:
    """Build the alternating chainmail link of an intersection graph.

    First guess: in every clasp, the side-A ring goes over at the top
    crossing and under at the bottom one.  If the resulting diagram is not
    alternating, clasp flips are searched exhaustively in lexicographic
    order (the space always holds an alternating assignment).
    """
    chords = G.chords
    clasps = list(G.edges)
    visits = _ring_visits(chords, clasps)

    # Arc labels from a global counter, components in chord order; the arc
    # written after visit k runs from visit k to visit k+1 (cyclically).
    arcs: dict[int, list[int]] = {}
    counter = 1
    for c in range(len(chords)):
        arcs[c] = list(range(counter, counter + len(visits[c])))
        counter += len(visits[c])

    # Crossing ids by first appearance along the global traversal.
    order: dict[_Crossing, int] = {}
    for c in range(len(chords)):
        for cr, _ in visits[c]:
            if cr not in order:
                order[cr] = len(order) + 1

    clasp_of = {
        cr: clasps.index((min(cr.piercer, cr.pierced),
                          max(cr.piercer, cr.pierced)))
        for cr in order
    }

    def over_ring(cr: _Crossing, mask: int) -> int:
        a_ring, b_ring = (
            (cr.piercer, cr.pierced)
            if G.sides[cr.piercer] == "A"
            else (cr.pierced, cr.piercer)
        )
        over = a_ring if cr.edge == "T" else b_ring
        if mask >> clasp_of[cr] & 1:
            over = cr.piercer if over == cr.pierced else cr.pierced
        return over

    def alternating(mask: int) -> bool:
        for c in range(len(chords)):
            roles = [over_ring(cr, mask) == c for cr, _ in visits[c]]
            if any(
                roles[i] == roles[(i + 1) % len(roles)]
                for i in range(len(roles))
            ):
                return False
        return True

    for mask in range(1 << len(clasps)):
        if alternating(mask):
            break
    else:
        raise AlternationFailure(
            "no clasp assignment makes the diagram alternating"
        )

    return _assemble(G, visits, arcs, order, over_ring, mask)


def _assemble(G, visits, arcs, order, over_ring, mask) -> LinkDiagram:
    chords = G.chords
    headings: dict[_Crossing, dict[str, tuple[int, int]]] = {}
    for c in range(len(chords)):
        n = len(visits[c])
        for k, (cr, d) in enumerate(visits[c]):
            into = arcs[c][k - 1] if n else 0
            out = arcs[c][k]
            headings.setdefault(cr, {})[d] = (into, out)

    infos = []
    for cr in sorted(order, key=order.get):
        over = over_ring(cr, mask)
        under = cr.piercer if over == cr.pierced else cr.pierced
        (du, (u_in, u_out)), (do, (o_in, o_out)) = sorted(
            headings[cr].items(),
            key=lambda item: 0 if _strand_of(cr, item[0]) == under else 1,
        )
        if _strand_of(cr, du) != under:
            raise InternalInvariantBreach("strand bookkeeping broke")
        ov, uv = _DIR_VEC[do], _DIR_VEC[du]
        sign = 1 if ov[0] * uv[1] - ov[1] * uv[0] > 0 else -1
        side_arcs = {_OPP[du]: u_in, du: u_out, _OPP[do]: o_in, do: o_out}
        s = _OPP[du]
        pd = []
        for _ in range(4):
            pd.append(side_arcs[s])
            s = _CCW_NEXT[s]
        infos.append(
            CrossingInfo(
                over_chord=over,
                under_chord=under,
                sign=sign,
                pd=tuple(pd),
            )
        )

    gauss = []
    for c in range(len(chords)):
        tokens = []
        for cr, _ in visits[c]:
            info = infos[order[cr] - 1]
            role = "O" if info.over_chord == c else "U"
            tokens.append(
                f"{role}{order[cr]}{'+' if info.sign > 0 else '-'}"
            )
        gauss.append(tuple(tokens))

    n = len(chords)
    sums = [[0] * n for _ in range(n)]
    for cr, cid in order.items():
        info = infos[cid - 1]
        a, b = info.over_chord, info.under_chord
        sums[a][b] += info.sign
        sums[b][a] += info.sign
    for row in sums:
        if any(x % 2 for x in row):
            raise InternalInvariantBreach("odd crossing sign sum")
    linking = tuple(tuple(x // 2 for x in row) for row in sums)

    components = tuple(
        ComponentInfo(chord=chords[c], side=G.sides[c], arcs=tuple(arcs[c]))
        for c in range(n)
    )
    return LinkDiagram(
        components=components,
        crossings=tuple(infos),
        gauss=tuple(gauss),
        linking_matrix=linking,
    )


def _strand_of(cr: _Crossing, direction: str) -> int:
    # Ends are traversed vertically, pierced edges horizontally.
    return cr.piercer if direction in ("N", "S") else cr.pierced


# -- independent alternation checking ---------------------------------------


def verify_alternating(diagram: LinkDiagram) -> tuple[bool, Optional[str]]:
    """Re-derive over/under roles from the PD code alone and check them.

    Uses only the crossing tuples and the components' arc lists: position 0
    of a tuple is the incoming under arc, position 2 the outgoing under arc,
    and of the remaining two the incoming over arc is the one whose cyclic
    successor within its component is the other.  Returns (True, None) or
    (False, description of the first break).
    """
    pd = [c.pd for c in diagram.crossings]
    arcs_of = [list(comp.arcs) for comp in diagram.components]
    succ: dict[int, int] = {}
    comp_of: dict[int, int] = {}
    for ci, arcs in enumerate(arcs_of):
        for k, a in enumerate(arcs):
            if a in succ:
                raise MalformedPD(f"arc {a} listed twice in components")
            succ[a] = arcs[(k + 1) % len(arcs)]
            comp_of[a] = ci

    counts: dict[int, int] = {}
    for tup in pd:
        if len(tup) != 4:
            raise MalformedPD(f"crossing {tup} does not have 4 arcs")
        for a in tup:
            if a not in succ:
                raise MalformedPD(f"arc {a} belongs to no component")
            counts[a] = counts.get(a, 0) + 1
    if any(c != 2 for c in counts.values()) or set(counts) != set(succ):
        raise MalformedPD("arcs must each meet exactly two crossing slots")

    entering: dict[int, str] = {}

    def assign(arc: int, role: str) -> None:
        if arc in entering:
            raise MalformedPD(f"arc {arc} enters two crossings")
        entering[arc] = role

    # In a 2-arc component succ is an involution, so both orderings of the
    # over pair look consecutive; those are settled after the sure ones.
    deferred: list[tuple[int, int]] = []
    for tup in pd:
        a, b, c, d = tup
        if succ[a] != c:
            raise MalformedPD(
                f"under strand {a}->{c} is not consecutive in its component"
            )
        b_ok = succ[b] == d
        d_ok = succ[d] == b
        if not b_ok and not d_ok:
            raise MalformedPD(
                f"neither of {b}, {d} continues into the other"
            )
        assign(a, "U")
        if b_ok and d_ok:
            deferred.append((b, d))
        else:
            assign(b if b_ok else d, "O")
    for b, d in deferred:
        if b in entering and d in entering:
            raise MalformedPD(
                f"arcs {b} and {d} both enter crossings already"
            )
        assign(b if d in entering else d, "O")

    for ci, arcs in enumerate(arcs_of):
        roles = [entering.get(a) for a in arcs]
        if None in roles:
            if any(r is not None for r in roles):
                raise MalformedPD(
                    f"component {ci + 1} has arcs missing from crossings"
                )
            continue
        for k in range(len(roles)):
            if roles[k] == roles[(k + 1) % len(roles)]:
                return (
                    False,
                    f"component {ci + 1} repeats {roles[k]} at arc "
                    f"{arcs[k]}",
                )
    return True, None


# -- renderers ---------------------------------------------------------------


def render_chord_diagram(D: LinearChordDiagram) -> str:
    lines = [
        "path: " + " ".join(map(str, D.path)),
        f"cut_edge: {D.cut_edge[0]}-{D.cut_edge[1]}",
    ]
    for ch, e, s in zip(D.chords, D.chord_edges, D.sides):
        lines.append(
            f"chord {{{ch[0]},{ch[1]}}} edge={e[0]}-{e[1]} side={s}"
        )
    return "\n".join(lines) + "\n"


def render_pd(diagram: LinkDiagram) -> str:
    lines = [f"components: {len(diagram.components)}"]
    for i, comp in enumerate(diagram.components, 1):
        arcs = " ".join(map(str, comp.arcs))
        lines.append(
            f"component {i} chord={{{comp.chord[0]},{comp.chord[1]}}} "
            f"side={comp.side} arcs=[{arcs}]"
        )
    for c in diagram.crossings:
        lines.append("X " + " ".join(map(str, c.pd)))
    lines.append("linking_matrix:")
    for row in diagram.linking_matrix:
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def render_gauss(diagram: LinkDiagram) -> str:
    lines = []
    for i, tokens in enumerate(diagram.gauss, 1):
        lines.append(f"component {i}: " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def intersection_graph_dot(G: IntersectionGraph) -> str:
    """Deterministic DOT text; side A nodes are circles, side B boxes."""
    lines = ["graph G_C {"]
    for i, (ch, side) in enumerate(zip(G.chords, G.sides)):
        shape = "circle" if side == "A" else "box"
        lines.append(
            f'  c{i} [label="{{{ch[0]},{ch[1]}}}" shape={shape}];'
        )
    for a, b in G.edges:
        lines.append(f"  c{a} -- c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
