"""Combinatorial simple 3-polytopes described by facet boundary cycles.

A polytope is entered as the list of its facet cycles, each a cyclic list of
vertex ids.  Vertices are implicitly the integers 0..max appearing anywhere.
Validation checks what the rest of the package relies on: every vertex lies in
exactly three facets, every edge is shared by exactly two facets with opposite
traversal after a consistent orientation of the facet cycles is chosen,
V - E + F = 2, and the edge skeleton is connected.  3-connectivity is not
checked, so spherical complexes that are not geometric polytopes are accepted.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadEdge,
    DisconnectedSkeleton,
    EulerViolation,
    MalformedFacet,
    NonSimple,
    NotHamiltonian,
    UnknownVertex,
)

__all__ = [
    "Cycle",
    "SimplePolytope3",
    "parse_polytope",
    "polytope_document",
    "polytope_hash",
    "truncate_vertex",
    "hamiltonian_cycles",
    "is_hamiltonian_cycle",
    "simplex",
    "cube",
    "prism",
]

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Cycle:
    """An edge path; closed by default, so the last vertex joins the first."""

    vertices: tuple[int, ...]
    closed: bool = True

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[Edge, ...]:
        vs = self.vertices
        pairs = [_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed:
            pairs.append(_edge(vs[-1], vs[0]))
        return tuple(pairs)


class SimplePolytope3:
    """A validated simple 3-polytope with derived incidence tables."""

    def __init__(self, facets: Sequence[Sequence[int]]):
        self.facets: tuple[tuple[int, ...], ...] = tuple(
            tuple(f) for f in facets
        )
        self._validate()

    # -- derived counts -------------------------------------------------

    @property
    def facet_count(self) -> int:
        return len(self.facets)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def facets_at(self, v: int) -> tuple[int, int, int]:
        return self.vertex_facets[v]

    def __repr__(self) -> str:
        return (
            f"SimplePolytope3(V={self.vertex_count}, "
            f"E={self.edge_count}, F={self.facet_count})"
        )

    # -- validation -----------------------------------------------------

    def _validate(self) -> None:
        facets = self.facets
        if not facets:
            raise MalformedFacet("no facets given")
        for i, f in enumerate(facets):
            if len(f) < 3:
                raise MalformedFacet(f"facet {i} has fewer than 3 vertices")
            for x in f:
                if type(x) is not int or x < 0:
                    raise MalformedFacet(
                        f"facet {i} holds a non-vertex entry: {x!r}"
                    )
            if len(set(f)) != len(f):
                raise MalformedFacet(f"facet {i} repeats a vertex")

        self.vertex_count = max(max(f) for f in facets) + 1

        membership: dict[int, list[int]] = {}
        for i, f in enumerate(facets):
            for v in f:
                membership.setdefault(v, []).append(i)
        bad = [
            v
            for v in range(self.vertex_count)
            if len(membership.get(v, ())) != 3
        ]
        if bad:
            raise NonSimple(bad)
        self.vertex_facets = {
            v: tuple(sorted(membership[v])) for v in range(self.vertex_count)
        }

        # Every undirected edge must occur in exactly two facet cycles.
        occurrences: dict[Edge, list[tuple[int, int, int]]] = {}
        directed: list[set[tuple[int, int]]] = []
        for i, f in enumerate(facets):
            pairs = set()
            for k in range(len(f)):
                u, v = f[k], f[(k + 1) % len(f)]
                pairs.add((u, v))
                occurrences.setdefault(_edge(u, v), []).append((i, u, v))
            directed.append(pairs)
        for e, occ in sorted(occurrences.items()):
            if len(occ) != 2 or occ[0][0] == occ[1][0]:
                raise BadEdge(
                    f"edge {e} occurs in facets "
                    f"{sorted(o[0] for o in occ)}, expected exactly 2"
                )

        self.edges = tuple(sorted(occurrences))
        self.edge_facets = {
            e: tuple(sorted(o[0] for o in occ))
            for e, occ in occurrences.items()
        }

        self._orient_facets(directed)

        adjacency: dict[int, list[int]] = {
            v: [] for v in range(self.vertex_count)
        }
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self.adjacency = {
            v: tuple(sorted(ns)) for v, ns in adjacency.items()
        }

        if self.vertex_count - len(self.edges) + len(facets) != 2:
            raise EulerViolation(
                f"V - E + F = {self.vertex_count} - {len(self.edges)} + "
                f"{len(facets)} != 2"
            )

        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.vertex_count:
            raise DisconnectedSkeleton(
                f"skeleton has {len(seen)} of {self.vertex_count} "
                "vertices in one component"
            )

    def _orient_facets(self, directed: list[set[tuple[int, int]]]) -> None:
        # Input cycles carry no orientation promise.  Choose a flip for each
        # facet so every edge is traversed once in each direction; failure
        # means the incidence structure cannot bound an orientable surface.
        flip: dict[int, bool] = {}
        neighbors: dict[int, list[tuple[int, int, int]]] = {
            i: [] for i in range(len(self.facets))
        }
        for (u, v), (a, b) in self.edge_facets.items():
            neighbors[a].append((b, u, v))
            neighbors[b].append((a, u, v))
        for start in range(len(self.facets)):
            if start in flip:
                continue
            flip[start] = False
            stack = [start]
            while stack:
                a = stack.pop()
                for b, u, v in neighbors[a]:
                    # direction of (u, v) as facet a actually traverses it
                    forward = ((u, v) in directed[a]) != flip[a]
                    # facet b must traverse the edge the opposite way
                    want = (v, u) if forward else (u, v)
                    b_flip = want not in directed[b]
                    if b in flip:
                        if flip[b] != b_flip:
                            raise BadEdge(
                                f"edge {_edge(u, v)} cannot be traversed in "
                                "opposite directions by its two facets"
                            )
                    else:
                        flip[b] = b_flip
                        stack.append(b)
        self.facet_flipped = tuple(flip[i] for i in range(len(self.facets)))

    def oriented_facet(self, i: int) -> tuple[int, ...]:
        """Facet cycle i in the globally consistent orientation."""
        f = self.facets[i]
        return tuple(reversed(f)) if self.facet_flipped[i] else f


# -- document round trip ------------------------------------------------


def parse_polytope(doc: str | dict) -> SimplePolytope3:
    """Build a polytope from a document: {"facets": [[...], ...]}."""
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "facets" not in doc:
        raise MalformedFacet("document must be an object with a 'facets' field")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) for f in facets
    ):
        raise MalformedFacet("'facets' must be an array of arrays")
    return SimplePolytope3(facets)


def polytope_document(P: SimplePolytope3) -> dict:
    """Writer inverse of parse_polytope; input facet order, no renaming."""
    return {"facets": [list(f) for f in P.facets]}


def polytope_hash(P: SimplePolytope3) -> str:
    text = json.dumps(polytope_document(P), separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:12]


# -- vertex truncation --------------------------------------------------


def truncate_vertex(P: SimplePolytope3, v: int) -> SimplePolytope3:
    """Cut one vertex, replacing it with a triangular facet.

    The three new vertices sit on the three former edges at v, taken in the
    cyclic order these edges appear around v (read off the first facet
    containing v in input order).  The first new vertex reuses the freed id v
    so vertex ids stay contiguous; the other two are named V and V+1 where V
    is the old vertex count.  The new triangle is appended after the existing
    facets.
    """
    if not (0 <= v < P.vertex_count):
        raise UnknownVertex(f"no vertex {v}")
    first = P.vertex_facets[v][0]
    cyc = P.facets[first]
    k = cyc.index(v)
    pred, succ = cyc[k - 1], cyc[(k + 1) % len(cyc)]
    third = next(w for w in P.adjacency[v] if w not in (pred, succ))
    # Around v the edges follow each other as (v,succ), (v,third), (v,pred):
    # consecutive edges share one of the three facets at v.
    V = P.vertex_count
    new_name = {
        _edge(v, succ): v,
        _edge(v, third): V,
        _edge(v, pred): V + 1,
    }
    facets = []
    for f in P.facets:
        if v not in f:
            facets.append(list(f))
            continue
        j = f.index(v)
        x, y = f[j - 1], f[(j + 1) % len(f)]
        g = list(f)
        g[j : j + 1] = [new_name[_edge(x, v)], new_name[_edge(v, y)]]
        facets.append(g)
    facets.append([v, V, V + 1])
    return SimplePolytope3(facets)


# -- Hamiltonian cycles --------------------------------------------------


def is_hamiltonian_cycle(P: SimplePolytope3, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(vs) != P.vertex_count or len(set(vs)) != len(vs):
        return False
    return all(
        vs[(i + 1) % len(vs)] in P.adjacency[vs[i]] for i in range(len(vs))
    )


def hamiltonian_cycles(P: SimplePolytope3) -> list[Cycle]:
    """All Hamiltonian cycles, one per undirected cycle.

    Exhaustive backtracking over the skeleton.  Canonical form: the vertex
    list starts at vertex 0 and the second vertex is smaller than the last,
    which fixes the traversal direction.  Results come out in lexicographic
    order of those vertex lists.
    """
    n = P.vertex_count
    adj = P.adjacency
    out: list[Cycle] = []
    visited = bytearray(n)
    visited[0] = 1
    path = [0]

    def viable(tip: int) -> bool:
        # Any unvisited vertex with fewer than two usable neighbors can
        # never get its two cycle edges.
        for x in range(n):
            if visited[x]:
                continue
            free = 0
            for w in adj[x]:
                if not visited[w] or w == tip or w == 0:
                    free += 1
            if free < 2:
                return False
        return True

    def extend(u: int) -> None:
        if len(path) == n:
            if 0 in adj[u] and path[1] < path[-1]:
                out.append(Cycle(tuple(path)))
            return
        for w in adj[u]:
            if visited[w]:
                continue
            visited[w] = 1
            path.append(w)
            if viable(w):
                extend(w)
            visited[w] = 0
            path.pop()

    extend(0)
    return out


# -- stock polytopes -----------------------------------------------------


def simplex() -> SimplePolytope3:
    """The 3-simplex: 4 triangles."""
    return SimplePolytope3([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def prism(n: int) -> SimplePolytope3:
    """The n-gonal prism: top and bottom n-gons, then n squares."""
    if n < 3:
        raise MalformedFacet("prism needs n >= 3")
    top = list(range(n))
    bottom = list(range(n, 2 * n))
    squares = [
        [i, (i + 1) % n, (i + 1) % n + n, i + n] for i in range(n)
    ]
    return SimplePolytope3([top, bottom, *squares])


def cube() -> SimplePolytope3:
    """The 3-cube, realized as the square prism."""
    return prism(4)


def _require_hamiltonian(P: SimplePolytope3, vertices: Sequence[int]) -> Cycle:
    if not is_hamiltonian_cycle(P, vertices):
        raise NotHamiltonian(f"{tuple(vertices)} is not a Hamiltonian cycle")
    return Cycle(tuple(vertices))
