"""Vertex truncation and a rational homology sphere with 5-chord links.

Cutting three corners off the simplex gives a simple polytope with 7
facets, 10 vertices and 15 edges.  Its single orientable labeling class
has all three involution quotients equal to S^3, so the small cover is a
rational homology sphere and every involution produces a 5-chord diagram
and an alternating branch link.
"""

import smallcover as sc

P = sc.simplex()
for v in (0, 1, 2):
    P = sc.truncate_vertex(P, v)
    print(
        f"after truncating {v}: F={P.facet_count} "
        f"V={P.vertex_count} E={P.edge_count}"
    )
print("facets:", P.facets, "\n")

(cf,) = sc.enumerate_characteristic_functions(P, orientable_only=True)
report = sc.analyze_involutions(P, cf)
print(sc.render_analysis(P, report))

for s in report.involutions:
    D = sc.chord_diagram(P, s.hamiltonian_cycle)
    G = sc.intersection_graph(D)
    diagram = sc.chainmail_diagram(G, D)
    ok, _ = sc.verify_alternating(diagram)
    print(
        f"g={s.g}: {len(D.chords)} chords, {len(G.edges)} interleavings, "
        f"{len(diagram.crossings)} crossings, alternating={ok}"
    )
