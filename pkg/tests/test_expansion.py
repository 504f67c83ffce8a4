import pytest

import flagsphere as fs

S7_FACES = {
    (0, 1, 2),
    (0, 2, 4),
    (3, 4, 6),
    (1, 3, 6),
    (0, 1, 6),
    (0, 4, 6),
    (1, 2, 5),
    (2, 4, 5),
    (3, 4, 5),
    (1, 3, 5),
}


def test_split_octahedron_fixture(octa):
    s7 = fs.split_vertex(octa, fs.SplitSpec(0, 1, 4))
    assert set(s7.faces) == S7_FACES
    assert s7.n == 7
    assert fs.is_flag(s7)


def test_split_junction_order_does_not_matter(octa):
    assert fs.split_vertex(octa, fs.SplitSpec(0, 4, 1)) == fs.split_vertex(
        octa, fs.SplitSpec(0, 1, 4)
    )


def test_split_then_contract_round_trip(flag_corpus10):
    for K in flag_corpus10:
        if K.n > 8:
            continue
        for spec, child in fs.flag_expansions(K):
            assert child.n == K.n + 1
            assert child.has_edge(spec.w, K.n)
            assert fs.contract(child, (spec.w, K.n)) == K


def test_split_spec_validation(octa):
    with pytest.raises(fs.BadSplitSpec):
        fs.split_vertex(octa, fs.SplitSpec(9, 0, 1))
    with pytest.raises(fs.BadSplitSpec):
        fs.split_vertex(octa, fs.SplitSpec(0, 1, 1))
    with pytest.raises(fs.BadSplitSpec):
        fs.split_vertex(octa, fs.SplitSpec(0, 1, 5))  # 5 not a neighbor of 0


def test_adjacent_split_creates_degree3(octa):
    # 1 and 2 are adjacent on the link cycle of 0
    out = fs.split_vertex(octa, fs.SplitSpec(0, 1, 2))
    assert out.n == 7
    assert min(out.degree(v) for v in range(7)) == 3
    assert not fs.is_flag(out)


def test_diagonal_count_identity():
    for k in range(4, 65):
        assert sum(i + 2 for i in range(k - 3)) == fs.diagonal_count(k)
    assert fs.diagonal_count(4) == 2
    assert fs.diagonal_count(5) == 5


def test_expansion_bounds(octa, s7):
    assert fs.expansion_bound(octa) == 12
    assert fs.expansion_bound(s7) == 20


def test_octahedron_expansions_all_isomorphic(octa):
    expansions = fs.flag_expansions(octa)
    assert len(expansions) == 12
    forms = {fs.canonical_form(child) for _, child in expansions}
    assert len(forms) == 1


def test_expansion_count_equals_bound(flag_corpus10):
    for K in flag_corpus10:
        assert len(fs.flag_expansions(K)) == fs.expansion_bound(K)


def test_expansions_reject_non_flag(tetra, bipyramid):
    with pytest.raises(fs.NotFlag):
        fs.flag_expansions(tetra)
    with pytest.raises(fs.NotFlag):
        fs.flag_expansions(bipyramid)


def test_expansion_specs_are_link_diagonals(s7):
    for spec, _ in fs.flag_expansions(s7):
        cyc = s7.link_cycle(spec.w)
        i, j = sorted((cyc.index(spec.a), cyc.index(spec.b)))
        assert j - i >= 2 and not (i == 0 and j == len(cyc) - 1)
