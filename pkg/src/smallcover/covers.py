"""Involutions of a small cover: edge labels, 2-factors, quotient types.

For an orientable admissible labeling, each edge F_i cap F_j carries the
kernel element lambda_i + lambda_j, and at every vertex the three incident
edges carry the three distinct involutions.  Dropping the edges labeled g
leaves every vertex with two edges, a disjoint union of k cycles; the
quotient of the cover by g is the k-fold connected sum #_{k-1} S2 x S1, read
as the 3-sphere when k = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charfun import (
    CharacteristicFunction,
    OrientationSubgroup,
    involution_name,
    orientability,
    orientation_subgroup,
    validate_star,
)
from .errors import InternalInvariantBreach, NotInSubgroup, NotOrientable
from .polytope import (
    Cycle,
    SimplePolytope3,
    polytope_hash,
)

__all__ = [
    "EdgeLabeling",
    "edge_labels",
    "TwoFactor",
    "two_factor",
    "QuotientType",
    "quotient_type",
    "InvolutionSummary",
    "AnalysisReport",
    "analyze_involutions",
    "render_analysis",
]

Edge = tuple[int, int]

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


@dataclass
class EdgeLabeling:
    """Kernel element per edge, with the subgroup it draws from."""

    labels: dict[Edge, int]
    subgroup: OrientationSubgroup


def edge_labels(
    P: SimplePolytope3,
    cf: CharacteristicFunction,
    G: OrientationSubgroup,
) -> EdgeLabeling:
    """Label every edge with the sum of its two facet vectors."""
    involutions = set(G.involutions)
    labels: dict[Edge, int] = {}
    for e, (a, b) in P.edge_facets.items():
        lab = cf.values[a] ^ cf.values[b]
        if lab not in involutions:
            raise InternalInvariantBreach(
                f"edge {e} label {lab} is outside the kernel"
            )
        labels[e] = lab
    for v in range(P.vertex_count):
        seen = {labels[e] for e in P.edges if v in e}
        if seen != involutions:
            raise InternalInvariantBreach(
                f"vertex {v} does not see all three involutions"
            )
    return EdgeLabeling(labels=labels, subgroup=G)


@dataclass
class TwoFactor:
    """The cycles left after removing the edges labeled g."""

    g: int
    cycles: tuple[Cycle, ...]

    @property
    def k(self) -> int:
        return len(self.cycles)


def two_factor(
    P: SimplePolytope3, labeling: EdgeLabeling, g: int
) -> TwoFactor:
    """Keep the edges not labeled g and trace the resulting cycles.

    Cycles are listed by minimum contained vertex and traversed from that
    vertex toward its smaller kept neighbor.
    """
    if g not in labeling.subgroup.involutions:
        raise NotInSubgroup(
            f"{g} is not a nonzero element of the orientation kernel"
        )
    kept: dict[int, list[int]] = {v: [] for v in range(P.vertex_count)}
    for (u, v), lab in labeling.labels.items():
        if lab != g:
            kept[u].append(v)
            kept[v].append(u)
    for v, ns in kept.items():
        if len(ns) != 2:
            raise InternalInvariantBreach(
                f"vertex {v} keeps {len(ns)} edges, expected 2"
            )
    cycles = []
    seen: set[int] = set()
    for start in range(P.vertex_count):
        if start in seen:
            continue
        prev, cur = start, min(kept[start])
        walk = [start]
        seen.add(start)
        while cur != start:
            walk.append(cur)
            seen.add(cur)
            a, b = kept[cur]
            prev, cur = cur, b if a == prev else a
        cycles.append(Cycle(tuple(walk)))
    return TwoFactor(g=g, cycles=tuple(cycles))


@dataclass(frozen=True)
class QuotientType:
    """The connected-sum count and its display form."""

    k: int
    rendering: str


def quotient_type(tf: TwoFactor) -> QuotientType:
    """Name the quotient manifold from the component count."""
    k = tf.k
    if k == 1:
        text = "S³"
    elif k == 2:
        text = "S²×S¹"
    else:
        text = f"#{str(k - 1).translate(_SUBSCRIPTS)} S²×S¹"
    return QuotientType(k=k, rendering=text)


@dataclass
class InvolutionSummary:
    g: int
    name: str
    factor: TwoFactor
    quotient: QuotientType

    @property
    def k(self) -> int:
        return self.factor.k

    @property
    def hamiltonian_cycle(self) -> Cycle | None:
        return self.factor.cycles[0] if self.factor.k == 1 else None


@dataclass
class AnalysisReport:
    cf: CharacteristicFunction
    canonical: CharacteristicFunction
    xi: int
    subgroup: OrientationSubgroup
    involutions: tuple[InvolutionSummary, ...]

    @property
    def is_hamiltonian(self) -> bool:
        return any(s.k == 1 for s in self.involutions)

    @property
    def is_rational_homology_sphere(self) -> bool:
        return all(s.k == 1 for s in self.involutions)


def analyze_involutions(
    P: SimplePolytope3, cf: CharacteristicFunction
) -> AnalysisReport:
    """Classify the quotient by each of the three kernel involutions."""
    from .charfun import canonicalize

    cf = validate_star(P, cf)
    xi = orientability(P, cf)
    if xi is None:
        raise NotOrientable(
            f"image {list(cf.image)} admits no orientation functional"
        )
    G = orientation_subgroup(xi)
    labeling = edge_labels(P, cf, G)
    summaries = []
    for g in G.involutions:
        tf = two_factor(P, labeling, g)
        summaries.append(
            InvolutionSummary(
                g=g,
                name=involution_name(P, cf, g),
                factor=tf,
                quotient=quotient_type(tf),
            )
        )
    return AnalysisReport(
        cf=cf,
        canonical=canonicalize(P, cf)[0],
        xi=xi,
        subgroup=G,
        involutions=tuple(summaries),
    )


def render_analysis(P: SimplePolytope3, report: AnalysisReport) -> str:
    """Stable line-per-field text form of an analysis report."""
    lines = [
        f"polytope: {polytope_hash(P)}",
        f"facets: {P.facet_count}",
        f"vertices: {P.vertex_count}",
        f"edges: {P.edge_count}",
        "lambda: " + " ".join(map(str, report.cf.values)),
        "orientable: true",
        f"xi: {report.xi}",
        "class: " + " ".join(map(str, report.canonical.values)),
    ]
    for s in report.involutions:
        cycles = " | ".join(
            " ".join(map(str, c.vertices)) for c in s.factor.cycles
        )
        lines.append(
            f"involution g={s.g} name={s.name} k={s.k} "
            f"quotient={s.quotient.rendering} cycles=[{cycles}]"
        )
    lines.append(f"hamiltonian: {str(report.is_hamiltonian).lower()}")
    lines.append(
        "rational_homology_sphere: "
        + str(report.is_rational_homology_sphere).lower()
    )
    return "\n".join(lines) + "\n"
