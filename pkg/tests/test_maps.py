import pytest

from polyscribe.corpus import CORPUS_NAMES, named_polytope
from polyscribe.errors import (DegenerateFace, EdgeNotInTwoFaces,
                               EulerViolation, NotThreeConnected)
from polyscribe.maps import (dual_map, maps_isomorphic, parse_map_json,
                             serialize_map_json, validate_map)

TETRA = {"vertices": 4, "faces": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]}


def test_validate_tetrahedron():
    m = validate_map(TETRA)
    assert m.n_vertices == 4 and len(m.edges) == 6 and m.n_faces == 4


def test_edge_in_one_face_rejected():
    with pytest.raises(EdgeNotInTwoFaces):
        validate_map({"vertices": 4, "faces": [[0, 1, 2], [0, 1, 3], [0, 2, 3]]})


def test_euler_violation():
    # two disjoint tetrahedra: V - E + F = 8 - 12 + 8 = 4, not 2
    faces = [[a, b, c] for base in (0, 4)
             for a, b, c in [(base, base + 1, base + 2), (base, base + 1, base + 3),
                             (base, base + 2, base + 3), (base + 1, base + 2, base + 3)]]
    with pytest.raises((EulerViolation, NotThreeConnected)):
        validate_map({"vertices": 8, "faces": faces})


def test_two_connected_rejected():
    # two tetrahedra glued along an edge: vertex cut {0, 1}
    faces = [[0, 1, 2], [0, 2, 3], [1, 2, 3],
             [0, 1, 4], [0, 4, 5], [1, 4, 5], [0, 3, 5], [1, 3, 5], [2, 3, 0]]
    with pytest.raises((NotThreeConnected, EdgeNotInTwoFaces, EulerViolation,
                        DegenerateFace)):
        validate_map({"vertices": 6, "faces": faces})


def test_degenerate_face_rejected():
    with pytest.raises(DegenerateFace):
        validate_map({"vertices": 4,
                      "faces": [[0, 1], [0, 1, 3], [0, 2, 3], [1, 2, 3]]})
    with pytest.raises(DegenerateFace):
        validate_map({"vertices": 4,
                      "faces": [[0, 1, 1], [0, 1, 3], [0, 2, 3], [1, 2, 3]]})


def test_dual_involution():
    for name in CORPUS_NAMES:
        m = named_polytope(name)
        assert maps_isomorphic(dual_map(dual_map(m)), m), name


def test_dual_classical_pairs():
    assert maps_isomorphic(dual_map(named_polytope("cube")),
                           named_polytope("octahedron"))
    assert maps_isomorphic(dual_map(named_polytope("tetrahedron")),
                           named_polytope("tetrahedron"))
    assert maps_isomorphic(dual_map(named_polytope("truncated-tetrahedron")),
                           named_polytope("triakis-tetrahedron"))
    assert maps_isomorphic(dual_map(named_polytope("icosahedron")),
                           named_polytope("dodecahedron"))


def test_json_roundtrip():
    m = named_polytope("triakis-octahedron")
    again = parse_map_json(serialize_map_json(m))
    assert again.faces == m.faces and again.n_vertices == m.n_vertices
