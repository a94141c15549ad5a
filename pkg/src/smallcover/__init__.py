"""Computational topology of small covers over simple 3-polytopes.

A small cover is a closed 3-manifold built from a simple 3-polytope P and a
characteristic function assigning a nonzero GF(2)^3 vector to every facet,
independent at each vertex.  This package validates such pairs, finds the
orientation functional and the three involutions in its kernel, classifies
each quotient as a connected sum of S^2 x S^1 pieces or S^3, and in the
Hamiltonian case emits the chord diagram, circle graph and alternating
chainmail link (PD and Gauss codes, linking matrix).
"""

from .charfun import (
    E1,
    E2,
    E3,
    CharacteristicFunction,
    ImageClass,
    canonicalize,
    classify_image,
    coloring_from_hamiltonian,
    dot,
    enumerate_characteristic_functions,
    independent_triple,
    involution_name,
    orientability,
    orientation_subgroup,
    OrientationSubgroup,
    same_orbit,
    star_violations,
    validate_star,
)
from .covers import (
    AnalysisReport,
    EdgeLabeling,
    InvolutionSummary,
    QuotientType,
    TwoFactor,
    analyze_involutions,
    edge_labels,
    quotient_type,
    render_analysis,
    two_factor,
)
from .errors import *  # noqa: F401,F403  (the exception vocabulary)
from .links import (
    IntersectionGraph,
    LinearChordDiagram,
    LinkDiagram,
    chainmail_diagram,
    chord_diagram,
    intersection_graph,
    intersection_graph_dot,
    interleave,
    linking_matrix_from_graph,
    render_chord_diagram,
    render_gauss,
    render_pd,
    verify_alternating,
)
from .polytope import (
    Cycle,
    SimplePolytope3,
    cube,
    hamiltonian_cycles,
    is_hamiltonian_cycle,
    parse_polytope,
    polytope_document,
    polytope_hash,
    prism,
    simplex,
    truncate_vertex,
)

__version__ = "0.1.0"
