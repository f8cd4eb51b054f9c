"""Face bookkeeping for simplicial and ridge-glued complexes."""

import pytest

from unfolder.complexes import (
    AbstractComplex,
    FacetPath,
    Gluing,
    PseudoComplex,
    as_pseudo,
    classes_of,
    dual_graph,
    facet_count_of,
    gluings_of,
    is_simplicial,
    link,
    path_from_facets,
    perspectivity,
    star_of_class,
    to_abstract,
    to_abstract_with_maps,
)
from unfolder.errors import (
    BadGluing,
    DegenerateFacet,
    InvalidPath,
    MixedDimension,
    NotSimplicial,
    SelfIdentification,
)
from unfolder.gallery import (
    boundary_simplex,
    doubled_triangle_sphere,
    nonsimplicial_unfolding_example,
    pinched_strip,
    starred_triangle,
)


@pytest.fixture
def tetra():
    return boundary_simplex(3)


def test_from_facets_sorts_and_validates():
    K = AbstractComplex.from_facets([(2, 1), (0, 1)])
    assert K.facets == ((0, 1), (1, 2))
    assert K.dim == 1


def test_from_facets_rejects_repeats_and_mixed_sizes():
    with pytest.raises(DegenerateFacet):
        AbstractComplex.from_facets([(0, 0, 1)])
    with pytest.raises(MixedDimension):
        AbstractComplex.from_facets([(0, 1), (0, 1, 2)])


def test_face_enumeration(tetra):
    assert tetra.face_count_vector() == (4, 6, 4)
    assert tetra.faces(0) == ((0,), (1,), (2,), (3,))
    assert len(tetra.faces(1)) == 6
    assert tetra.has_face((1, 3))
    assert not tetra.has_face((0, 4))
    assert tetra.facet_id((1, 2, 3)) == 3


def test_link_of_vertex(tetra):
    lk = link(tetra, (0,))
    assert lk.dim == 1
    assert lk.facet_count == 3  # the opposite triangle's edges


def test_derived_gluings_pair_facets_along_shared_ridges(tetra):
    gl = tetra.derived_gluings()
    assert len(gl) == 6  # one per edge
    for g in gl:
        fa, fb = tetra.facets[g.facet_a], tetra.facets[g.facet_b]
        shared_a = tuple(fa[i] for i in g.ridge_a)
        shared_b = tuple(fb[i] for i in g.ridge_b)
        assert shared_a == shared_b  # global vertices agree pointwise


def test_as_pseudo_faithful_for_good_links(tetra):
    P = as_pseudo(tetra)
    counts = classes_of(P).counts_by_dim()
    assert tuple(counts[k] for k in range(3)) == (4, 6, 4)
    ok, witness = is_simplicial(P)
    assert ok and witness is None


def test_as_pseudo_splits_the_pinch_vertex():
    K = pinched_strip()
    counts = classes_of(as_pseudo(K)).counts_by_dim()
    # one more vertex class than vertices: the waist comes apart
    assert counts[0] == len(K.vertices()) + 1


def test_round_trip_through_abstract(tetra):
    P = as_pseudo(tetra)
    K, facet_map, vertex_ids = to_abstract_with_maps(P)
    assert K.face_count_vector() == tetra.face_count_vector()
    assert sorted(facet_map) == list(range(4))
    assert len(vertex_ids) == 4
    assert to_abstract(P).facet_count == 4


def test_to_abstract_refuses_split_faces():
    P = as_pseudo(nonsimplicial_unfolding_example())
    with pytest.raises(NotSimplicial):
        to_abstract(P)


def test_doubled_triangle_is_not_simplicial():
    P = doubled_triangle_sphere()
    ok, witness = is_simplicial(P)
    assert not ok
    a, b = witness
    assert a != b


def test_gluing_validation_catches_bad_data():
    with pytest.raises(BadGluing):
        Gluing(0, (0, 1), 0, (0, 1), (0, 1)).validate(2, 2)  # self-gluing
    with pytest.raises(BadGluing):
        Gluing(0, (1, 0), 1, (0, 1), (0, 1)).validate(2, 2)  # unsorted ridge
    with pytest.raises(BadGluing):
        Gluing(0, (0, 1), 1, (0, 1), (0, 2)).validate(2, 2)  # not onto ridge_b
    with pytest.raises(BadGluing):
        Gluing(0, (0, 1), 5, (0, 1), (0, 1)).validate(2, 2)  # facet out of range


def test_self_identification_is_refused():
    bad = PseudoComplex(
        2,
        2,
        (
            Gluing(0, (0, 1), 1, (0, 1), (0, 1)),
            Gluing(0, (1, 2), 1, (0, 1), (0, 1)),
        ),
    )
    with pytest.raises(SelfIdentification):
        bad.classes()


def test_dual_graph_structure(tetra):
    dg = dual_graph(tetra)
    assert dg.node_count == 4
    assert dg.is_connected()
    assert dg.components() == [(0, 1, 2, 3)]
    adj = dg.adjacency()
    assert all(len(adj[f]) == 3 for f in range(4))


def test_facet_path_walks_and_reverses(tetra):
    path = path_from_facets(tetra, (0, 1, 3))
    assert path.facet_sequence(tetra) == (0, 1, 3)
    back = path.reversed(tetra)
    assert back.facet_sequence(tetra) == (3, 1, 0)
    assert path.length == 2


def test_path_from_facets_rejects_non_neighbors(tetra):
    with pytest.raises(InvalidPath):
        path_from_facets(tetra, (0, 0))


def test_perspectivity_matches_shared_vertices(tetra):
    gl = gluings_of(tetra)
    g = gl[0]
    p = perspectivity(tetra, g.facet_a, 0)
    fa, fb = tetra.facets[g.facet_a], tetra.facets[g.facet_b]
    for i in g.ridge_a:
        assert fb[p[i]] == fa[i]  # shared vertices map to themselves


def test_star_of_class_collects_incident_facets(tetra):
    classes = classes_of(tetra)
    vid = classes.class_of((0, (0,)))
    star = star_of_class(tetra, vid)
    assert len(star.parent_facets) == 3  # three triangles at a vertex


def test_contains_relation(tetra):
    classes = classes_of(tetra)
    v = classes.class_of((0, (0,)))
    e = classes.class_of((0, (0, 1)))
    assert classes.contains(v, e)
    assert not classes.contains(e, v)
