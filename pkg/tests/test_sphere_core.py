import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import flagsphere as fs

# 7-vertex torus: 2-neighborly, every vertex link a 6-cycle, Euler char 0
TORUS_FACES = [((i) % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [
    ((i) % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)
]


def test_tetrahedron_counts(tetra):
    assert (tetra.n, tetra.n_edges, tetra.n_faces) == (4, 6, 4)
    assert tetra.r_vector() == {3: 4}


def test_octahedron_structure(octa):
    assert (octa.n, octa.n_edges, octa.n_faces) == (6, 12, 8)
    assert octa.r_vector() == {4: 6}
    for u, v in ((0, 5), (1, 4), (2, 3)):
        assert not octa.has_edge(u, v)
    assert octa.link_cycle(0) == (1, 2, 4, 3)


def test_link_cycles(tetra, s7):
    assert tetra.link_cycle(0) == (1, 2, 3)
    cyc = s7.link_cycle(1)
    assert len(cyc) == 5
    assert set(cyc) == {0, 2, 3, 5, 6}


def test_s7_r_vector(s7):
    assert s7.r_vector() == {4: 5, 5: 2}


def test_link_cycle_normalization(corpus9):
    for K in corpus9:
        for v in range(K.n):
            cyc = K.link_cycle(v)
            assert len(cyc) == K.degree(v)
            assert len(set(cyc)) == len(cyc)
            assert cyc[0] == min(cyc)
            if len(cyc) >= 3:
                assert cyc[1] < cyc[-1]


def test_rotation_consistency(octa):
    succ = octa.rotation(0)
    pred = octa.rotation(0, reverse=True)
    cyc = octa.link_cycle(0)
    for i, v in enumerate(cyc):
        nxt = cyc[(i + 1) % len(cyc)]
        assert succ[v] == nxt or pred[v] == nxt


def test_counting_identities(corpus9):
    for K in corpus9:
        assert K.n - K.n_edges + K.n_faces == 2
        assert 3 * K.n_faces == 2 * K.n_edges
        assert K.n_edges == 3 * K.n - 6
        assert sum(k * c for k, c in K.r_vector().items()) == 2 * K.n_edges


def test_face_order_insensitive(s7):
    faces = list(s7.faces)
    random.Random(3).shuffle(faces)
    assert fs.from_faces(7, faces) == s7


def test_rejects_open_disk():
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert exc.value.reason == "edge-degree"


def test_rejects_bad_indices():
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [(0, 1, 2), (0, 1, 9), (0, 2, 9), (1, 2, 9)])
    assert exc.value.reason == "bad-index"
    # vertex 4 never occurs
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(5, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.reason == "bad-index"
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [(0, 1, 1), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.reason == "bad-index"
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [(0, 1), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.reason == "bad-index"
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [("a", 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.reason == "bad-index"


def test_rejects_duplicate_face():
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(4, [(0, 1, 2), (2, 1, 0), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert exc.value.reason == "duplicate-face"


def test_rejects_pinched_sphere():
    # two tetrahedra sharing vertex 0: every link but 0's is a cycle
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    faces += [(0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)]
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(7, faces)
    assert exc.value.reason == "link-not-cycle"


def test_rejects_torus():
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(7, TORUS_FACES)
    assert exc.value.reason == "euler-fail"


def test_rejects_disjoint_union():
    # tetrahedron plus a shifted torus: Euler count is 2 overall and every
    # local check passes, so only face connectivity can reject it
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    faces += [tuple(v + 4 for v in f) for f in TORUS_FACES]
    with pytest.raises(fs.NotASphere) as exc:
        fs.from_faces(11, faces)
    assert exc.value.reason == "disconnected"


def test_bad_vertex_accessors(octa):
    with pytest.raises(fs.BadVertex):
        octa.link_cycle(6)
    with pytest.raises(fs.BadVertex):
        octa.degree(-1)
    with pytest.raises(fs.BadVertex):
        octa.neighbors(17)


def test_tri_round_trip(octa, s7, tetra):
    for K in (octa, s7, tetra):
        assert fs.parse_tri(fs.dump_tri(K)) == K


def test_tri_dump_format(octa):
    text = fs.dump_tri(octa)
    lines = text.splitlines()
    assert lines[0] == "6"
    assert lines[1] == "0 1 2"
    assert len(lines) == 9
    assert text.endswith("\n")


def test_tri_parse_comments_and_blanks(octa):
    text = "c a comment\n\n6\nc another\n" + "\n".join(
        f"{a} {b} {c}" for a, b, c in octa.faces
    )
    assert fs.parse_tri(text) == octa


@pytest.mark.parametrize(
    "text",
    [
        "",
        "c only a comment\n",
        "abc\n0 1 2\n",
        "4\n0 1\n",
        "4\n0 1 2 3\n",
        "4\n0 one 2\n",
    ],
)
def test_tri_parse_rejects(text):
    with pytest.raises(fs.FormatError):
        fs.parse_tri(text)


def test_corpus_round_trip(octa, s7, tetra):
    spheres = [tetra, octa, s7]
    text = fs.dump_corpus(spheres)
    assert fs.parse_corpus(text) == spheres


def test_equality_and_hash(octa, s7):
    again = fs.from_faces(6, list(octa.faces))
    assert again == octa
    assert hash(again) == hash(octa)
    assert octa != s7
    assert len({octa, again, s7}) == 2


@settings(deadline=None, max_examples=60)
@given(seed=st.integers(0, 2**32 - 1), target=st.integers(5, 11))
def test_random_spheres_validate(random_sphere, seed, target):
    K = random_sphere(seed, target)
    assert K.n == target
    assert K.n - K.n_edges + K.n_faces == 2
    assert 3 * K.n_faces == 2 * K.n_edges
    assert fs.parse_tri(fs.dump_tri(K)) == K
