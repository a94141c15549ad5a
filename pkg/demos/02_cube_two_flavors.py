"""Two small covers over the cube with very different quotients.

The cube carries four labeling classes.  The 3-coloring (opposite facets
share a color) is the 3-torus: every involution quotient is S^2 x S^1 and
no two-factor is a Hamiltonian cycle.  The 4-colorings are Hamiltonian:
one involution still gives S^2 x S^1, the other two give S^3, and the
branch links are chains of four rings.
"""

import smallcover as sc

P = sc.cube()
classes = sc.enumerate_characteristic_functions(P, orientable_only=True)
print(f"cube has {len(classes)} orientable labeling classes\n")

for cf in classes:
    report = sc.analyze_involutions(P, cf)
    kind = sc.classify_image(cf).value
    print(f"lambda {cf.values}  ({kind})")
    for s in report.involutions:
        print(f"  g={s.g} ({s.name}): k={s.k}, quotient {s.quotient.rendering}")
    print(f"  hamiltonian={report.is_hamiltonian}\n")

# the chain of four rings behind one Hamiltonian class
cf = next(
    c for c in classes
    if sc.classify_image(c) is sc.ImageClass.FOUR_COLORING
)
report = sc.analyze_involutions(P, cf)
s = next(x for x in report.involutions if x.k == 1)
D = sc.chord_diagram(P, s.hamiltonian_cycle)
G = sc.intersection_graph(D)
diagram = sc.chainmail_diagram(G, D)
print("circle graph edges (a 4-cycle):", G.edges)
print(f"{len(diagram.components)} rings, {len(diagram.crossings)} crossings")
print("signed linking matrix:")
for row in diagram.linking_matrix:
    print("  ", " ".join(f"{x:2d}" for x in row))
