import json

import networkx as nx
import pytest

import smallcover as sc
from helpers_oracles import naive_hamiltonian_count

from conftest import truncated_simplex


def test_simplex_counts():
    P = sc.simplex()
    assert (P.vertex_count, P.edge_count, P.facet_count) == (4, 6, 4)
    assert P.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert P.facets_at(0) == (0, 1, 2)
    assert P.neighbors(0) == (1, 2, 3)


def test_prism_counts():
    for n in (3, 4, 5, 6):
        P = sc.prism(n)
        assert (P.vertex_count, P.edge_count, P.facet_count) == (
            2 * n,
            3 * n,
            n + 2,
        )
    assert sc.cube().facets == sc.prism(4).facets


def test_every_edge_in_two_facets():
    P = sc.prism(5)
    for e, fs in P.edge_facets.items():
        assert len(fs) == 2
        for f in fs:
            assert e[0] in P.facets[f] and e[1] in P.facets[f]


def test_facet_orientation_is_repaired():
    # one facet listed backwards still describes the same sphere
    P = sc.SimplePolytope3([[0, 1, 2], [3, 1, 0], [0, 2, 3], [1, 2, 3]])
    assert P.edge_count == 6
    # oriented facets traverse every directed edge exactly once
    directed = set()
    for i in range(P.facet_count):
        cyc = P.oriented_facet(i)
        for k in range(len(cyc)):
            d = (cyc[k], cyc[(k + 1) % len(cyc)])
            assert d not in directed
            directed.add(d)
    assert len(directed) == 2 * P.edge_count


# -- validation failures -----------------------------------------------------


def test_malformed_facets():
    with pytest.raises(sc.MalformedFacet):
        sc.SimplePolytope3([[0, 1], [0, 1, 2], [0, 2, 1]])
    with pytest.raises(sc.MalformedFacet):
        sc.SimplePolytope3([[0, 1, 2, 1], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    with pytest.raises(sc.MalformedFacet):
        sc.SimplePolytope3([[0, 1, "2"], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    with pytest.raises(sc.MalformedFacet):
        sc.SimplePolytope3([[0, 1, -2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def test_non_simple_pyramid():
    # square pyramid: the apex meets four facets
    with pytest.raises(sc.NonSimple) as err:
        sc.SimplePolytope3(
            [[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4], [0, 3, 2, 1]]
        )
    assert err.value.vertices == (4,)


def test_bad_edge_occurrence():
    # vertex degrees check out but edge (0,2) lies in one facet only
    with pytest.raises(sc.BadEdge):
        sc.SimplePolytope3([[0, 1, 2, 3], [0, 1, 2, 3], [0, 2, 1, 3]])


def test_bad_edge_orientation():
    # hemicube: a projective plane, so no consistent facet orientation
    with pytest.raises(sc.BadEdge):
        sc.SimplePolytope3([[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]])


def test_euler_violation_torus():
    # K3,3 drawn on the torus: simple, edges fine, V - E + F = 0
    with pytest.raises(sc.EulerViolation):
        sc.SimplePolytope3(
            [[0, 3, 1, 4, 2, 5], [0, 4, 1, 5, 2, 3], [0, 5, 1, 3, 2, 4]]
        )


def test_disconnected_skeleton():
    # tetrahedron next to a torus component: Euler total is still 2
    facets = [
        [0, 1, 2],
        [0, 1, 3],
        [0, 2, 3],
        [1, 2, 3],
        [4, 7, 5, 8, 6, 9],
        [4, 8, 5, 9, 6, 7],
        [4, 9, 5, 7, 6, 8],
    ]
    with pytest.raises(sc.DisconnectedSkeleton):
        sc.SimplePolytope3(facets)


# -- documents ---------------------------------------------------------------


def test_document_round_trip():
    P = sc.prism(6)
    doc = sc.polytope_document(P)
    Q = sc.parse_polytope(json.dumps(doc))
    assert Q.facets == P.facets


def test_parse_rejects_bad_documents():
    with pytest.raises(sc.MalformedFacet):
        sc.parse_polytope({"facets": "nope"})
    with pytest.raises(sc.MalformedFacet):
        sc.parse_polytope({})
    with pytest.raises(json.JSONDecodeError):
        sc.parse_polytope("{not json")


def test_hash_is_stable():
    assert sc.polytope_hash(sc.simplex()) == "87e63e3504ba"
    assert sc.polytope_hash(sc.simplex()) == sc.polytope_hash(sc.simplex())
    assert sc.polytope_hash(sc.cube()) != sc.polytope_hash(sc.simplex())


# -- truncation ---------------------------------------------------------------


def test_truncation_counts():
    P = sc.simplex()
    expect = [(4, 6, 4), (6, 9, 5), (8, 12, 6), (10, 15, 7)]
    for t in range(1, 4):
        P = sc.truncate_vertex(P, t - 1)
        assert (P.vertex_count, P.edge_count, P.facet_count) == expect[t]
        assert P.vertex_count - P.edge_count + P.facet_count == 2


def test_truncation_adds_triangle():
    P = sc.truncate_vertex(sc.simplex(), 0)
    assert len(P.facets[-1]) == 3
    # the three facets that met the cut corner grow to quadrilaterals
    sizes = sorted(len(f) for f in P.facets)
    assert sizes == [3, 3, 4, 4, 4]


def test_truncate_unknown_vertex():
    with pytest.raises(sc.UnknownVertex):
        sc.truncate_vertex(sc.simplex(), 9)


def test_truncation_is_simple_every_time():
    P = sc.prism(5)
    for v in (0, 3, 7):
        P = sc.truncate_vertex(P, v)
        assert P.vertex_count - P.edge_count + P.facet_count == 2


# -- hamiltonian cycles --------------------------------------------------------


def test_cycle_edges_wrap():
    c = sc.Cycle((0, 1, 3, 2))
    assert c.edges() == ((0, 1), (1, 3), (2, 3), (0, 2))


def test_is_hamiltonian_cycle():
    P = sc.simplex()
    assert sc.is_hamiltonian_cycle(P, (0, 1, 3, 2))
    assert sc.is_hamiltonian_cycle(P, (1, 3, 0, 2))
    assert not sc.is_hamiltonian_cycle(P, (0, 1, 2))
    assert not sc.is_hamiltonian_cycle(P, (0, 1, 3, 3))
    Q = sc.cube()
    assert not sc.is_hamiltonian_cycle(Q, (0, 1, 2, 3, 4, 5, 6, 7))


def test_hamiltonian_counts_match_naive_search(corpus):
    for name, P in corpus.items():
        cycles = sc.hamiltonian_cycles(P)
        assert naive_hamiltonian_count(P) == 2 * len(cycles), name
        for C in cycles:
            assert sc.is_hamiltonian_cycle(P, C.vertices)
        # canonical form: starts at 0, second entry smaller than last
        for C in cycles:
            assert C.vertices[0] == 0
            assert C.vertices[1] < C.vertices[-1]
        assert sorted(c.vertices for c in cycles) == [
            c.vertices for c in cycles
        ]


def test_simplex_has_three_cycles():
    assert [c.vertices for c in sc.hamiltonian_cycles(sc.simplex())] == [
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (0, 2, 1, 3),
    ]


def test_cube_has_six_cycles():
    assert len(sc.hamiltonian_cycles(sc.cube())) == 6


def test_tutte_graph_has_none():
    # planar, cubic, 3-connected, famously not Hamiltonian
    G = nx.tutte_graph()
    ok, emb = nx.check_planarity(G)
    assert ok
    used = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) not in used:
            faces.append(emb.traverse_face(u, v, mark_half_edges=used))
    P = sc.SimplePolytope3(faces)
    assert P.facet_count == 25
    assert sc.hamiltonian_cycles(P) == []


def test_truncated_simplices_from_conftest():
    assert truncated_simplex(3).facet_count == 7
