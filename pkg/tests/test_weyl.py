import numpy as np
import pytest

import twosilt as ts
from twosilt import weyl
from twosilt.errors import CapExceededError


def test_reflection_matrix_a2_linear():
    g = ts.build_dynkin("A", 2, "linear")
    r1 = ts.reflection_matrix(g, 1)
    assert r1.column(1) == (-1, 1)
    assert r1.column(2) == (0, 1)


def test_reflection_matrix_a1():
    g = ts.build_dynkin("A", 1)
    assert ts.reflection_matrix(g, 1).rows == ((-1,),)


def test_reflections_are_involutions():
    g = ts.build_dynkin("A", 3, "linear")
    ident = weyl.GMatrix.identity(3)
    for i in g.vertices:
        r = ts.reflection_matrix(g, i)
        assert r @ r == ident


def test_reflection_index_error():
    g = ts.build_dynkin("A", 2)
    with pytest.raises(IndexError):
        ts.reflection_matrix(g, 3)
    with pytest.raises(IndexError):
        ts.g_of_word(g, (1, 5))


def test_g_of_word_basics():
    g = ts.build_dynkin("A", 2, "linear")
    assert ts.g_of_word(g, ()) == weyl.GMatrix.identity(2)
    assert ts.g_of_word(g, (1,)) == ts.reflection_matrix(g, 1)
    assert ts.g_of_word(g, (1, 2, 1)) == ts.g_of_word(g, (2, 1, 2))


def test_g_of_word_antihomomorphism():
    g = ts.build_dynkin("A", 3, "linear")
    u, v = (1, 2), (3, 1)
    assert ts.g_of_word(g, u + v) == ts.g_of_word(g, v) @ ts.g_of_word(g, u)


@pytest.mark.parametrize("family,rank,order", [
    ("A", 2, 6), ("A", 3, 24), ("D", 4, 192), ("A", 4, 120),
])
def test_enumerate_orders(groups, family, rank, order):
    _, W = groups(family, rank)
    assert W.order == order
    assert len({W.mats[i].tobytes() for i in range(W.order)}) == order


def test_w0_longest(groups):
    _, W = groups("A", 2)
    assert W.order == 6
    assert W.w0.length == 3
    assert W.w0.word in [(1, 2, 1), (2, 1, 2)]


def test_cap_exceeded():
    g = ts.build_dynkin("A", 3)
    with pytest.raises(CapExceededError) as exc:
        ts.enumerate_group(g, cap=10)
    assert exc.value.partial_count == 10


def test_lengths_are_bfs_depths_and_flip_by_one(groups):
    _, W = groups("A", 3, "linear")
    for x in range(W.order):
        for i in range(1, 4):
            y = W.act_left(i, x)
            assert abs(int(W.lengths[y]) - int(W.lengths[x])) == 1


def test_word_from_matrix_roundtrip(groups):
    g, W = groups("A", 3, "linear")
    for idx in range(W.order):
        word = weyl.word_from_matrix(g, weyl.GMatrix.from_numpy(W.mats[idx]))
        assert len(word) == int(W.lengths[idx])
        assert ts.g_of_word(g, word).to_numpy().tobytes() == W.mats[idx].tobytes()
    with pytest.raises(ValueError):
        weyl.word_from_matrix(g, weyl.GMatrix(((1, 1, 0), (0, 1, 0), (0, 0, 1))))


def test_longest_element_matches_enumeration(groups):
    for family, rank in [("A", 4), ("D", 4)]:
        g, W = groups(family, rank)
        assert weyl.longest_element(g).to_numpy().tobytes() == W.mats[W.w0_index].tobytes()


def test_iota_conjugate():
    g = ts.build_dynkin("A", 3, "linear")
    r1 = ts.reflection_matrix(g, 1)
    conj = ts.iota_conjugate(g.iota, r1)
    assert conj == ts.reflection_matrix(g, 3)
    assert ts.iota_conjugate(g.iota, conj) == r1
    ident_iota = (1, 2, 3)
    assert ts.iota_conjugate(ident_iota, r1) == r1
    m = weyl.iota_matrix(g.iota)
    assert m @ m == weyl.GMatrix.identity(3)


def test_reflectionsigma_all_vertices():
    for family, rank in [("A", 5), ("D", 5), ("E", 6)]:
        g = ts.build_dynkin(family, rank)
        for i in g.vertices:
            assert ts.iota_conjugate(g.iota, ts.reflection_matrix(g, i)) == \
                ts.reflection_matrix(g, g.iota_of(i))


@pytest.mark.parametrize("family,rank,labeling,size", [
    ("A", 2, "figure1", 2),
    ("A", 3, "linear", 8),
    ("A", 5, "figure1", 48),
])
def test_fixed_subgroup_sizes(groups, family, rank, labeling, size):
    _, W = groups(family, rank, labeling)
    assert len(ts.fixed_subgroup(W)) == size


def test_fixed_subgroup_a2_elements(groups):
    _, W = groups("A", 2)
    fixed = ts.fixed_subgroup(W)
    lengths = sorted(el.length for el in fixed)
    assert lengths == [0, 3]      # identity and the longest element


def test_gsigma_identity_exhaustive(groups):
    # matrix conjugation equals letterwise relabelling of words
    for family, rank, labeling in [("A", 2, "figure1"), ("A", 3, "linear"),
                                   ("A", 4, "figure1"), ("A", 5, "figure1"),
                                   ("D", 4, "figure1"), ("D", 5, "figure1")]:
        g, W = groups(family, rank, labeling)
        perm = np.array([i - 1 for i in g.iota])
        conj = W.mats[:, perm][:, :, perm]
        relabeled = W.iota_relabel_indices()
        assert (W.mats[relabeled] == conj).all()


def test_w0_conjugation_identity_exhaustive(groups):
    for family, rank in [("A", 3), ("A", 5), ("D", 4), ("D", 5)]:
        g, W = groups(family, rank)
        perm = np.array([i - 1 for i in g.iota])
        conj = W.mats[:, perm][:, :, perm]
        g0 = W.mats[W.w0_index]
        lhs = np.einsum("ij,njk,kl->nil", g0, W.mats, g0)
        assert (lhs == conj).all()


def test_coxeter_relations_from_edges(groups):
    g, _ = groups("D", 4)
    for i in g.vertices:
        for j in g.vertices:
            m = g.coxeter_label(i, j)
            prod = ts.g_of_word(g, (i, j))
            assert weyl.matrix_order(prod) == (1 if i == j else m)


def test_covers(groups):
    _, W = groups("A", 2, "figure1")
    e = W.element(0)
    assert all(d == "up" for _, d in W.covers(e))
    assert all(d == "down" for _, d in W.covers(W.w0))
    s1 = W.element(W.act_left(1, 0))
    dirs = dict(W.covers(s1))
    assert dirs[1] == "down" and dirs[2] == "up"


def test_canonical_order_is_matrix_lex(groups):
    _, W = groups("A", 3, "linear")
    elements = list(W.elements())
    flats = [tuple(el.g.to_numpy().reshape(-1)) for el in elements]
    assert flats == sorted(flats)


def test_element_json(groups):
    _, W = groups("A", 2)
    el = W.element(W.act_left(1, 0))
    data = el.to_json()
    assert data["word"] == [1] and data["length"] == 1
    assert data["matrix"] == [list(c) for c in el.g.columns()]


@pytest.mark.parametrize("family,rank,labeling,expect_order", [
    ("A", 5, "figure1", 48),
    ("D", 5, "figure1", 384),
    ("E", 6, "figure1", 1152),
])
def test_verify_folded_presentation(groups, family, rank, labeling, expect_order):
    g, W = groups(family, rank, labeling)
    report = ts.verify_folded_presentation(W, ts.fold(g))
    assert report.ok, report.mismatches
    assert report.subgroup_order == expect_order
    assert report.expected_order == expect_order


def test_mult_and_index(groups):
    _, W = groups("A", 2)
    s1 = W.act_left(1, 0)
    s2 = W.act_left(2, 0)
    s1s2 = W.mult(s1, s2)
    # s1 * s2 has length 2
    assert int(W.lengths[s1s2]) == 2
    assert W.index_of(W.element(s1s2).g) == s1s2
    with pytest.raises(ValueError):
        W.index_of(weyl.GMatrix(((2, 0), (0, 1))))


def test_gmatrix_determinants(groups):
    _, W = groups("A", 3, "linear")
    for idx in range(W.order):
        el = W.element(idx)
        assert el.g.det() in (1, -1)
        assert el.g.det() == (1 if el.length % 2 == 0 else -1)


def test_default_cap_constant():
    assert weyl.DEFAULT_CAP == 10 ** 6
