import random

import pytest

import smallcover as sc
from helpers_oracles import brute_force_class_counts, cyclically_equal, gl3_tables


def test_dot_is_gf2_pairing():
    assert sc.dot(7, 1) == 1
    assert sc.dot(7, 3) == 0
    assert sc.dot(5, 4) == 1
    assert sc.dot(0, 6) == 0


def test_independent_triple():
    assert sc.independent_triple(1, 2, 4)
    assert sc.independent_triple(3, 5, 1)
    assert not sc.independent_triple(1, 2, 3)  # sums to zero
    assert not sc.independent_triple(1, 1, 2)  # repeat
    assert not sc.independent_triple(0, 1, 2)  # zero vector
    assert not sc.independent_triple(3, 5, 6)  # pairwise fine, sum zero


def test_validate_star_accepts_canonical_simplex():
    cf = sc.validate_star(sc.simplex(), [1, 2, 4, 7])
    assert cf.values == (1, 2, 4, 7)
    assert cf.image == (1, 2, 4, 7)
    assert cf[3] == 7 and len(cf) == 4


def test_validate_star_reports_vertices():
    with pytest.raises(sc.StarViolation) as err:
        sc.validate_star(sc.simplex(), [1, 2, 4, 3])
    assert err.value.vertices == (1,)
    assert sc.star_violations(sc.simplex(), [1, 2, 4, 3]) == [1]


def test_validate_star_rejects_garbage():
    with pytest.raises(sc.ZeroVector):
        sc.validate_star(sc.simplex(), [1, 2, 4, 0])
    with pytest.raises(ValueError):
        sc.validate_star(sc.simplex(), [1, 2, 4])
    with pytest.raises(ValueError):
        sc.validate_star(sc.simplex(), [1, 2, 4, 9])
    with pytest.raises(ValueError):
        sc.validate_star(sc.simplex(), [1, 2, 4, "7"])


# -- orientability -------------------------------------------------------------


def test_simplex_orientation_functional():
    P = sc.simplex()
    cf = sc.validate_star(P, [1, 2, 4, 7])
    xi = sc.orientability(P, cf)
    assert xi == 7
    G = sc.orientation_subgroup(xi)
    assert G.elements == (0, 3, 5, 6)
    assert G.involutions == (3, 5, 6)


def test_orientation_functional_hits_every_value():
    # xi must evaluate to 1 on each lambda value
    P = sc.cube()
    cf = sc.validate_star(P, [1, 1, 2, 4, 7, 4])
    xi = sc.orientability(P, cf)
    assert xi is not None
    assert all(sc.dot(xi, v) == 1 for v in cf.values)


def test_non_orientable_labelings():
    P = sc.prism(6)
    cf = sc.validate_star(P, [1, 1, 2, 4, 2, 4, 2, 5])
    assert sc.orientability(P, cf) is None
    cf5 = sc.validate_star(P, [1, 1, 2, 4, 2, 4, 3, 5])
    assert sc.orientability(P, cf5) is None
    assert len(cf5.image) == 5


def test_orientation_subgroup_rejects_zero():
    with pytest.raises(sc.ZeroFunctional):
        sc.orientation_subgroup(0)


def test_classify_image():
    P = sc.cube()
    three = sc.validate_star(P, [1, 1, 2, 4, 2, 4])
    four = sc.validate_star(P, [1, 1, 2, 4, 7, 4])
    assert sc.classify_image(three) is sc.ImageClass.THREE_COLORING
    assert sc.classify_image(four) is sc.ImageClass.FOUR_COLORING
    bad = sc.validate_star(sc.prism(6), [1, 1, 2, 4, 2, 4, 3, 5])
    with pytest.raises(sc.NotOrientableImage):
        sc.classify_image(bad)
    # 4-element image that is not {basis + sum}: e1, e2, e3, e1+e3
    skew = sc.validate_star(sc.prism(6), [1, 1, 2, 4, 2, 4, 2, 5])
    with pytest.raises(sc.NotOrientableImage):
        sc.classify_image(skew)


# -- canonical forms and enumeration -------------------------------------------


def test_canonicalize_pins_vertex_zero():
    P = sc.cube()
    # image of (1,1,2,4,7,4) under the basis change 1->2, 2->4, 4->1
    cf = sc.validate_star(P, [2, 2, 4, 1, 7, 1])
    canon, mat = sc.canonicalize(P, cf)
    f1, f2, f3 = P.vertex_facets[0]
    assert (canon[f1], canon[f2], canon[f3]) == (1, 2, 4)
    assert canon.values == (1, 1, 2, 4, 7, 4)
    assert sc.validate_star(P, canon.values)
    # canonicalizing a canonical form is the identity
    again, _ = sc.canonicalize(P, canon)
    assert again.values == canon.values


def test_same_orbit_under_random_basis_changes():
    P = sc.prism(5)
    cfs = sc.enumerate_characteristic_functions(P, orientable_only=True)
    rng = random.Random(11)
    tables = gl3_tables()
    for cf in cfs:
        for _ in range(5):
            m = rng.choice(tables)
            moved = tuple(m[v] for v in cf.values)
            sc.validate_star(P, moved)  # admissibility is equivariant
            assert sc.same_orbit(P, cf, sc.CharacteristicFunction(moved))
    assert not sc.same_orbit(P, cfs[0], cfs[1])


def test_enumeration_simplex():
    out = sc.enumerate_characteristic_functions(sc.simplex())
    assert [cf.values for cf in out] == [(1, 2, 4, 7)]
    out = sc.enumerate_characteristic_functions(
        sc.simplex(), orientable_only=True
    )
    assert [cf.values for cf in out] == [(1, 2, 4, 7)]


def test_enumeration_returns_sorted_pinned_representatives():
    P = sc.prism(6)
    out = sc.enumerate_characteristic_functions(P)
    f1, f2, f3 = P.vertex_facets[0]
    vals = [cf.values for cf in out]
    assert vals == sorted(vals)
    assert len(set(vals)) == len(vals)
    for cf in out:
        assert (cf[f1], cf[f2], cf[f3]) == (1, 2, 4)
        sc.validate_star(P, cf.values)


@pytest.mark.parametrize("name", ["simplex", "cube", "trunc1", "trunc2"])
def test_enumeration_matches_brute_force(name, corpus):
    P = corpus[name]
    total, orientable = brute_force_class_counts(P)
    assert len(sc.enumerate_characteristic_functions(P)) == total
    assert (
        len(sc.enumerate_characteristic_functions(P, orientable_only=True))
        == orientable
    )


def test_cube_class_counts():
    out = sc.enumerate_characteristic_functions(sc.cube(), orientable_only=True)
    assert [cf.values for cf in out] == [
        (1, 1, 2, 4, 2, 4),
        (1, 1, 2, 4, 7, 4),
        (1, 1, 2, 7, 2, 4),
        (1, 7, 2, 4, 2, 4),
    ]


# -- colorings from cycles ------------------------------------------------------


def test_coloring_from_hamiltonian_simplex():
    P = sc.simplex()
    cf = sc.coloring_from_hamiltonian(P, (0, 1, 3, 2))
    assert cf.values == (1, 4, 7, 2)
    canon, _ = sc.canonicalize(P, cf)
    assert canon.values == (1, 2, 4, 7)


def test_coloring_round_trip(corpus):
    for name, P in corpus.items():
        for C in sc.hamiltonian_cycles(P):
            cf = sc.coloring_from_hamiltonian(P, C.vertices)
            cf = sc.validate_star(P, cf.values)
            xi = sc.orientability(P, cf)
            assert xi is not None, name
            lab = sc.edge_labels(P, cf, sc.orientation_subgroup(xi))
            tf = sc.two_factor(P, lab, 3)
            assert tf.k == 1, name
            assert cyclically_equal(tf.cycles[0].vertices, C.vertices)


def test_coloring_rejects_non_cycles():
    with pytest.raises(sc.NotHamiltonian):
        sc.coloring_from_hamiltonian(sc.simplex(), (0, 1, 2))
    with pytest.raises(sc.NotHamiltonian):
        sc.coloring_from_hamiltonian(sc.cube(), (0, 1, 2, 3, 4, 5, 6, 7))


def test_involution_names():
    P = sc.simplex()
    cf = sc.validate_star(P, [1, 2, 4, 7])
    assert sc.involution_name(P, cf, 3) == "λ1+λ2"
    assert sc.involution_name(P, cf, 5) == "λ1+λ3"
    assert sc.involution_name(P, cf, 6) == "λ2+λ3"
    with pytest.raises(sc.NotInSubgroup):
        sc.involution_name(P, cf, 1)
