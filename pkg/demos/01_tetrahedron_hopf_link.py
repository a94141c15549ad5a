"""The smallest example end to end: the tetrahedron and the Hopf link.

The real projective space RP^3 is the small cover over the 3-simplex with
the labeling (e1, e2, e3, e1+e2+e3).  Quotienting by any of the three
orientation-preserving involutions gives S^3, and the branch set of one of
those quotients turns out to be the Hopf link.  This script walks the whole
pipeline and prints every artifact.
"""

import smallcover as sc

P = sc.simplex()
print("facets:", P.facets)

# there is exactly one labeling class, the 4-coloring
(cf,) = sc.enumerate_characteristic_functions(P, orientable_only=True)
print("lambda:", cf.values)

report = sc.analyze_involutions(P, cf)
print()
print(sc.render_analysis(P, report))

# pick the involution lambda_2 + lambda_3 and cut its Hamiltonian cycle open
s = next(x for x in report.involutions if x.name == "λ2+λ3")
print(f"two-factor of g={s.g} is a single cycle:", s.hamiltonian_cycle.vertices)

D = sc.chord_diagram(P, s.hamiltonian_cycle)
print()
print(sc.render_chord_diagram(D))

G = sc.intersection_graph(D)
print(sc.intersection_graph_dot(G))

# two interleaving chords clasp exactly once: the Hopf link
diagram = sc.chainmail_diagram(G, D)
print(sc.render_pd(diagram))
print(sc.render_gauss(diagram))
ok, _ = sc.verify_alternating(diagram)
print("alternating:", ok)
print("linking number of the two rings:", diagram.linking_matrix[0][1])
