import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import flagsphere as fs


def test_form_is_relabeling_invariant(octa, s7, relabel):
    rng = random.Random(11)
    for K in (octa, s7):
        base = fs.canonical_form(K)
        for _ in range(20):
            perm = list(range(K.n))
            rng.shuffle(perm)
            assert fs.canonical_form(relabel(K, perm)) == base


def test_forms_separate_classes(octa, s7, tetra, bipyramid):
    forms = {fs.canonical_form(K) for K in (octa, s7, tetra, bipyramid)}
    assert len(forms) == 4


def test_forms_separate_whole_corpus(corpus10):
    forms = {fs.canonical_form(K) for K in corpus10}
    assert len(forms) == len(corpus10)


def test_encode_decode_round_trip(s7):
    form = fs.canonical_form(s7)
    n, faces = fs.decode_form(form)
    assert n == 7
    assert len(faces) == 10
    assert fs.encode_face_set(n, faces) == form


def test_decode_rejects_garbage():
    with pytest.raises(fs.FormatError):
        fs.decode_form(b"")
    with pytest.raises(fs.FormatError):
        fs.decode_form(b"\x00\x00\x00\x07")
    with pytest.raises(fs.FormatError):
        fs.decode_form(fs.canonical_form(fs.octahedron())[:-4])


def test_canonical_sphere_is_stable(s7):
    rep = fs.canonical_sphere(s7)
    assert fs.isomorphic(rep, s7)
    assert fs.canonical_form(rep) == fs.canonical_form(s7)
    assert fs.canonical_sphere(rep) == rep
    assert fs.sphere_from_form(fs.canonical_form(s7)) == rep


def test_form_hex(octa, s7):
    hx = fs.form_hex(fs.canonical_form(octa))
    assert len(hx) == 64
    assert set(hx) <= set("0123456789abcdef")
    assert hx != fs.form_hex(fs.canonical_form(s7))


def test_isomorphic_examples(octa, s7, relabel):
    assert fs.isomorphic(octa, relabel(octa, [2, 4, 0, 5, 1, 3]))
    assert not fs.isomorphic(octa, s7)


def test_isomorphic_agrees_with_brute_on_small_corpus(corpus10, relabel):
    small = [K for K in corpus10 if K.n <= 7]
    rng = random.Random(5)
    for A in small:
        for B in small:
            assert fs.isomorphic(A, B) == fs.brute_isomorphic(A, B)
        perm = list(range(A.n))
        rng.shuffle(perm)
        image = relabel(A, perm)
        assert fs.isomorphic(A, image) and fs.brute_isomorphic(A, image)


@settings(deadline=None, max_examples=40)
@given(seed=st.integers(0, 2**32 - 1))
def test_random_relabelings_share_form(random_sphere, relabel, seed):
    rng = random.Random(seed)
    K = random_sphere(seed, rng.randrange(6, 11))
    perm = list(range(K.n))
    rng.shuffle(perm)
    assert fs.canonical_form(relabel(K, perm)) == fs.canonical_form(K)
