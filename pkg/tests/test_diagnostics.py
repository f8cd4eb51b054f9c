"""Colorings, odd faces, manifold checks and isomorphism search."""

import pytest

from unfolder.complexes import AbstractComplex, classes_of
from unfolder.diagnostics import (
    ProjectionConstraint,
    balanced_coloring,
    euler_characteristic,
    is_locally_strongly_connected,
    is_nice,
    is_pseudo_manifold,
    is_strongly_connected,
    isomorphic,
    link_graph_is_bipartite,
    mod2_boundary_check,
    odd_subcomplex,
    orientable,
)
from unfolder.errors import NotLocallyStronglyConnected
from unfolder.gallery import (
    boundary_simplex,
    cycle_graph,
    hexagon_cone,
    knot_neighborhood,
    nonsimplicial_unfolding_example,
    pinched_strip,
    starred_triangle,
    surface_family,
    torus_z3,
)
from unfolder.unfoldings import complete_unfolding, partial_unfolding


def test_connectivity_flags():
    assert is_strongly_connected(boundary_simplex(3))
    assert is_locally_strongly_connected(boundary_simplex(3)) == (True, None)
    ok, witness = is_locally_strongly_connected(pinched_strip())
    assert not ok and witness is not None


def test_balanced_coloring_found_and_proper():
    K = hexagon_cone()
    coloring = balanced_coloring(K)
    assert coloring is not None
    classes = classes_of(K)
    for cid_a in classes.classes_of_card(1):
        for cid_b in classes.classes_of_card(1):
            if cid_a < cid_b and any(
                set(classes.vertex_classes_of(e)) == {cid_a, cid_b}
                for e in classes.classes_of_card(2)
            ):
                assert coloring[cid_a] != coloring[cid_b]


def test_balanced_coloring_absent():
    assert balanced_coloring(boundary_simplex(3)) is None
    assert balanced_coloring(pinched_strip()) is None  # despite a trivial group


def test_odd_subcomplex_of_tetrahedron_boundary():
    odd = odd_subcomplex(boundary_simplex(3))
    assert len(odd.odd_faces) == 4
    assert odd.as_complex is not None
    assert odd.as_complex.facets == ((0,), (1,), (2,), (3,))


def test_odd_subcomplex_empty_cases():
    assert odd_subcomplex(torus_z3()).is_empty
    assert odd_subcomplex(hexagon_cone()).is_empty
    assert odd_subcomplex(cycle_graph(3)).is_empty  # no faces of codimension 2


def test_odd_subcomplex_needs_connected_stars():
    with pytest.raises(NotLocallyStronglyConnected):
        odd_subcomplex(pinched_strip())


def test_link_graph_parity():
    K = starred_triangle()
    classes = classes_of(K)
    center = classes.class_of((0, (2,)))
    rim = classes.class_of((0, (0,)))
    assert not link_graph_is_bipartite(K, center)  # triangle around the apex
    assert link_graph_is_bipartite(K, rim)


def test_pseudo_manifold_census():
    assert is_pseudo_manifold(boundary_simplex(3)) == "closed"
    assert is_pseudo_manifold(starred_triangle()) == "with-boundary"
    three_at_an_edge = AbstractComplex.from_facets(
        [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
    )
    assert is_pseudo_manifold(three_at_an_edge) == "no"


def test_orientability():
    assert orientable(boundary_simplex(3))
    assert orientable(knot_neighborhood(3, "orientable").complex)
    assert not orientable(knot_neighborhood(3, "klein").complex)


def test_euler_characteristic_values():
    assert euler_characteristic(boundary_simplex(3)) == 2
    assert euler_characteristic(torus_z3()) == 0
    assert euler_characteristic(starred_triangle()) == 1


def test_mod2_boundary_positive():
    K = boundary_simplex(3)
    odd = odd_subcomplex(K)
    ok, chain = mod2_boundary_check(K, odd.as_complex)
    assert ok
    # the witness chain really has the four vertices as its mod-2 boundary
    degree = {v: 0 for v in K.vertices()}
    for edge in chain:
        for v in edge:
            degree[v] += 1
    assert all(d % 2 == 1 for d in degree.values())


def test_mod2_boundary_negative():
    K = boundary_simplex(3)
    ok, chain = mod2_boundary_check(K, [(0,)])  # a single vertex never bounds
    assert not ok and chain is None


def test_isomorphic_finds_relabelings():
    A = boundary_simplex(3)
    B = AbstractComplex.from_facets(
        [(10, 11, 12), (10, 11, 13), (10, 12, 13), (11, 12, 13)]
    )
    w = isomorphic(A, B)
    assert w is not None
    assert sorted(w.facet_map) == [0, 1, 2, 3]


def test_isomorphic_rejects_different_complexes():
    assert isomorphic(boundary_simplex(3), starred_triangle()) is None
    assert isomorphic(starred_triangle(), hexagon_cone()) is None


def test_isomorphic_respects_projection_constraints():
    T = starred_triangle()
    u = complete_unfolding(T)
    same = ProjectionConstraint.identity_on(u.projection, T.dim + 1)
    w = isomorphic(u.total, u.total, constraints=(same, same))
    assert w is not None
    for f, t in enumerate(w.facet_map):
        assert u.projection[f] == u.projection[t]


def test_vertex_bijection_of_witness():
    A = boundary_simplex(3)
    B = AbstractComplex.from_facets(
        [(4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7)]
    )
    w = isomorphic(A, B)
    pairs = w.vertex_bijection(A, B)
    assert len(pairs) == 4


def test_is_nice_examples():
    assert is_nice(boundary_simplex(3))
    assert is_nice(starred_triangle())
    assert not is_nice(nonsimplicial_unfolding_example())


def test_pinched_strip_regression_triple():
    from unfolder.projectivities import projectivity_group
    from unfolder.unfoldings import projection_is_isomorphism

    K = pinched_strip()
    assert projectivity_group(K).group.is_trivial
    assert balanced_coloring(K) is None
    assert not projection_is_isomorphism(complete_unfolding(K))
    assert not projection_is_isomorphism(partial_unfolding(K))


def test_surfaces_are_closed_and_orientable():
    for g in range(3):
        P = surface_family(g)
        assert is_pseudo_manifold(P) == "closed"
        assert orientable(P)
        # each family member is a pinched sphere; the genus shows up upstairs
        assert euler_characteristic(P) == 2
        assert euler_characteristic(complete_unfolding(P).total) == 2 - 2 * g
