"""From a Hamiltonian cycle back to a labeling.

Any Hamiltonian cycle C of a simple 3-polytope induces a labeling: the
facets on each side of C form a tree under adjacency across non-cycle
edges, so each side can be 2-colored, and the four colors e1, e2, e3,
e1+e2+e3 make C the two-factor of the involution e1+e2.  This is the
inverse direction of the analysis pipeline.
"""

import smallcover as sc

P = sc.prism(5)
cycles = sc.hamiltonian_cycles(P)
print(f"pentagonal prism has {len(cycles)} Hamiltonian cycles\n")

for C in cycles:
    cf = sc.coloring_from_hamiltonian(P, C.vertices)
    canon, _ = sc.canonicalize(P, cf)
    report = sc.analyze_involutions(P, cf)
    back = next(s for s in report.involutions if s.g == 3)
    print(f"cycle {C.vertices}")
    print(f"  lambda {cf.values}  class {canon.values}")
    print(f"  g=3 two-factor: k={back.k}, cycle {back.factor.cycles[0].vertices}")
