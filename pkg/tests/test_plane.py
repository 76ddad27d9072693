import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trilec.errors import DiagonalAdjacent, EdgeNotPresent, NonSimple, NotATriangulation, WrongDegree
from trilec.graph import canonical_code, degree_profile, is_isomorphic
from trilec.plane import (
    canonical_triangulation_code,
    collapse_degree4_vertex,
    delete_degree3_vertex,
    faces,
    flip_edge,
    from_rotation_system,
    icosahedron,
    octahedron,
    stack_vertex,
    stacked_triangulation,
    tetrahedron,
)


def tcode(t):
    return canonical_triangulation_code(t)


def test_tetrahedron_and_octahedron_faces():
    assert len(faces(tetrahedron())) == 4
    assert len(faces(octahedron())) == 8


def test_icosahedron_faces():
    assert len(faces(icosahedron())) == 20


def test_g16_faces(catalog):
    assert len(faces(catalog["G16"].embedding)) == 14


def test_c4_rotation_rejected():
    with pytest.raises(NotATriangulation) as info:
        from_rotation_system([(1, 3), (2, 0), (3, 1), (0, 2)])
    assert len(info.value.face) == 4


@pytest.mark.parametrize(
    "rot",
    [
        [(1, 1, 2), (0, 2), (0, 1)],  # repeated neighbour
        [(0, 1, 2), (2, 0), (0, 1)],  # loop
        [(1, 2, 3), (0, 2), (0, 1, 3), (0, 2)],  # asymmetric: 3 missing from 1
    ],
)
def test_malformed_rotation_rejected(rot):
    with pytest.raises((NonSimple, NotATriangulation)):
        from_rotation_system(rot)


def test_faces_are_triangles_of_the_graph(tri_sets):
    for t in tri_sets(8):
        fs = faces(t)
        assert len(fs) == 2 * t.order - 4
        g = t.graph()
        for f in fs:
            assert all(g.has_edge(a, b) for a, b in itertools.combinations(f, 2))


def test_flip_in_k4_is_absent():
    t = tetrahedron()
    assert all(flip_edge(t, e) is None for e in t.edges())


def test_flip_missing_edge():
    t = octahedron()
    with pytest.raises(EdgeNotPresent):
        flip_edge(t, _non_edge(t))


def _non_edge(t):
    return next((u, v) for u, v in itertools.combinations(range(t.order), 2) if not t.has_edge(u, v))


def test_octahedron_flips_give_profile_222():
    t = octahedron()
    for e in t.edges():
        f = flip_edge(t, e)
        assert f is not None
        assert degree_profile(f.graph()) == {3: 2, 4: 2, 5: 2}
        assert len(faces(f)) == 8


def test_flip_is_involutive(tri_sets):
    for t in tri_sets(8):
        for a, b in t.edges():
            f = flip_edge(t, (a, b))
            if f is None:
                continue
            c, d = next(e for e in f.edges() if not t.has_edge(*e))
            assert tcode(flip_edge(f, (c, d))) == tcode(t)


def test_delete_stacked_apex():
    t = stacked_triangulation(5)
    v = t.degrees().index(3)
    assert tcode(delete_degree3_vertex(t, v)) == tcode(tetrahedron())


def test_delete_g11_three_vertex_gives_octahedron(catalog):
    # the 3-vertex sits on a triangle of 5-vertices, each of which drops to 4
    t = catalog["G11"].embedding
    r = delete_degree3_vertex(t, t.degrees().index(3))
    assert degree_profile(r.graph()) == {4: 6}
    assert tcode(r) == tcode(octahedron())


def test_delete_wrong_degree():
    with pytest.raises(WrongDegree):
        delete_degree3_vertex(octahedron(), 0)


def test_collapse_g15_gives_g16(catalog):
    t = catalog["G15"].embedding
    want = tcode(catalog["G16"].embedding)
    hits = 0
    for v in (x for x in range(t.order) if t.degree(x) == 4):
        r = t.rotations[v]
        for x, y in ((r[0], r[2]), (r[1], r[3])):
            if t.has_edge(x, y):
                continue
            got = collapse_degree4_vertex(t, v, (x, y))
            if degree_profile(got.graph()) == {4: 3, 5: 6}:
                assert tcode(got) == want
                hits += 1
    assert hits


def test_collapse_octahedron_gives_k5_minus_edge():
    t = octahedron()
    r = t.rotations[0]
    got = collapse_degree4_vertex(t, 0, (r[0], r[2]))
    assert got.order == 5
    assert degree_profile(got.graph()) == {3: 2, 4: 3}
    assert tcode(got) == tcode(stacked_triangulation(5))


def test_collapse_adjacent_diagonal():
    t = stacked_triangulation(6)
    for v in (x for x in range(t.order) if t.degree(x) == 4):
        r = t.rotations[v]
        for x, y in ((r[0], r[2]), (r[1], r[3])):
            if t.has_edge(x, y):
                with pytest.raises(DiagonalAdjacent):
                    collapse_degree4_vertex(t, v, (x, y))
                return
    pytest.fail("no adjacent diagonal found")


def test_collapse_wrong_degree():
    with pytest.raises(WrongDegree):
        collapse_degree4_vertex(tetrahedron(), 0, (1, 2))


def test_stack_vertex_adds_three_vertex():
    t = stack_vertex(octahedron(), faces(octahedron())[0])
    assert t.order == 7
    assert sorted(t.degrees()) == [3, 4, 4, 4, 5, 5, 5]
    assert len(faces(t)) == 10


def test_six_vertex_codes_differ(tri_sets):
    a, b = tri_sets(6)
    assert tcode(a) != tcode(b)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(range(5)), st.data())
def test_code_invariant_under_relabel_and_reflection(idx, data):
    t = [octahedron(), icosahedron(), stacked_triangulation(7), stacked_triangulation(9), tetrahedron()][idx]
    perm = data.draw(st.permutations(range(t.order)))
    assert tcode(t.relabel(list(perm))) == tcode(t)
    assert tcode(t.reflected().relabel(list(perm))) == tcode(t)


@pytest.mark.parametrize("n", range(4, 9))
def test_triangulation_codes_match_graph_codes(tri_sets, n):
    # maximal planar graphs on few vertices have a unique embedding up to reflection
    members = list(tri_sets(n))
    assert len({tcode(t) for t in members}) == len({canonical_code(t.graph()) for t in members}) == len(members)


def test_icosahedron_graph_is_isomorphic_to_catalog(catalog):
    assert is_isomorphic(icosahedron().graph(), catalog["ICOSA"].graph) is not None
