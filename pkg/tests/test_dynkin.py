import pytest

import twosilt as ts
from twosilt import dynkin


def test_a5_figure1_edges():
    g = ts.build_dynkin("A", 5)
    assert set(g.edges) == {(2, 3), (1, 2), (1, 4), (4, 5)}
    assert g.labeling == "figure1"


def test_a3_linear():
    g = ts.build_dynkin("A", 3, "linear")
    assert g.edges == ((1, 2), (2, 3))
    assert g.iota == (3, 2, 1)


def test_a1_trivial():
    g = ts.build_dynkin("A", 1)
    assert g.edges == ()
    assert g.iota == (1,)


def test_invalid_types():
    with pytest.raises(ValueError):
        ts.build_dynkin("D", 3)
    with pytest.raises(ValueError):
        ts.build_dynkin("E", 9)
    with pytest.raises(ValueError):
        ts.build_dynkin("B", 2)
    with pytest.raises(ValueError):
        ts.build_dynkin("D", 4, "linear")
    with pytest.raises(ValueError):
        ts.build_dynkin("A", 3, "zigzag")


def _closed_form_iota(family, rank):
    """The per-family formulas under the default labeling."""
    if family == "A" and rank % 2 == 1:
        n = (rank + 1) // 2
        out = {1: 1}
        for i in range(2, n + 1):
            out[i] = i + n - 1
            out[i + n - 1] = i
        return tuple(out[i] for i in range(1, rank + 1))
    if family == "A":
        n = rank // 2
        return tuple((i + n) if i <= n else (i - n) for i in range(1, rank + 1))
    if family == "D" and rank % 2 == 1:
        out = list(range(1, rank + 1))
        out[0], out[rank - 1] = rank, 1
        return tuple(out)
    if family == "E" and rank == 6:
        return (1, 2, 5, 6, 3, 4)
    return tuple(range(1, rank + 1))   # D even, E7, E8


@pytest.mark.parametrize("family,rank", [("A", r) for r in range(1, 9)]
                         + [("D", r) for r in range(4, 9)]
                         + [("E", 6), ("E", 7), ("E", 8)])
def test_iota_matches_closed_formulas(family, rank):
    g = ts.build_dynkin(family, rank)
    assert g.iota == _closed_form_iota(family, rank)


@pytest.mark.parametrize("family,rank", [("A", r) for r in range(1, 9)]
                         + [("D", r) for r in range(4, 9)]
                         + [("E", 6), ("E", 7), ("E", 8)])
def test_iota_involution_and_automorphism(family, rank):
    g = ts.build_dynkin(family, rank)
    for i in g.vertices:
        assert g.iota_of(g.iota_of(i)) == i
    for (u, v) in g.edges:
        assert g.has_edge(g.iota_of(u), g.iota_of(v))


def test_compute_iota_is_labeling_aware():
    lin = ts.build_dynkin("A", 5, "linear")
    assert lin.iota == (5, 4, 3, 2, 1)
    fig = ts.build_dynkin("A", 5)
    assert fig.iota == (1, 4, 5, 2, 3)


def test_fold_a5():
    f = ts.fold(ts.build_dynkin("A", 5))
    assert (f.family, f.rank) == ("B", 3)
    assert f.t_words == ((1,), (2, 4), (3, 5))
    assert f.coxeter_label(1, 2) == 4
    assert f.coxeter_label(2, 3) == 3
    assert f.coxeter_label(1, 3) == 2


def test_fold_a6():
    f = ts.fold(ts.build_dynkin("A", 6))
    assert (f.family, f.rank) == ("B", 3)
    assert f.t_words == ((1, 4, 1), (2, 5), (3, 6))


def test_fold_d5():
    f = ts.fold(ts.build_dynkin("D", 5))
    assert (f.family, f.rank) == ("B", 4)
    assert f.t_words == ((1, 5), (2,), (3,), (4,))


def test_fold_e6():
    f = ts.fold(ts.build_dynkin("E", 6))
    assert (f.family, f.rank) == ("F", 4)
    assert f.t_words == ((1,), (2,), (3, 5), (4, 6))
    assert f.coxeter_label(2, 3) == 4


def test_fold_identity_types():
    for family, rank in [("D", 4), ("D", 6), ("E", 7), ("E", 8)]:
        g = ts.build_dynkin(family, rank)
        f = ts.fold(g)
        assert (f.family, f.rank) == (family, rank)
        assert all(w == (i,) for i, w in zip(g.vertices, f.t_words))


def test_folded_rank_is_orbit_count():
    for family, rank in [("A", 4), ("A", 7), ("D", 5), ("D", 7), ("E", 6)]:
        g = ts.build_dynkin(family, rank)
        orbits = {frozenset({i, g.iota_of(i)}) for i in g.vertices}
        assert ts.fold(g).rank == len(orbits)


def test_folded_labels_range():
    for family, rank in [("A", 2), ("A", 5), ("A", 6), ("D", 4), ("D", 5), ("E", 6), ("E", 7)]:
        f = ts.fold(ts.build_dynkin(family, rank))
        for i in f.vertices:
            for j in f.vertices:
                m = f.coxeter_label(i, j)
                assert (m == 1) == (i == j)
                if i != j:
                    assert m in (2, 3, 4)
                    if m == 4:
                        assert f.family in ("B", "F")


def test_e_t_supports():
    f = ts.fold(ts.build_dynkin("A", 6))
    assert f.e_t_supports == ((1, 4), (2, 5), (3, 6))
    f5 = ts.fold(ts.build_dynkin("A", 5))
    assert f5.e_t_supports == ((1,), (2, 4), (3, 5))


def test_weyl_order_closed_forms():
    assert dynkin.weyl_order("A", 3) == 24
    assert dynkin.weyl_order("B", 3) == 48
    assert dynkin.weyl_order("D", 4) == 192
    assert dynkin.weyl_order("B", 1) == 2
    assert dynkin.weyl_order("F", 4) == 1152
    assert dynkin.weyl_order("E", 6) == 51840


def test_graph_json_roundtrip():
    g = ts.build_dynkin("D", 5)
    data = g.to_json()
    assert data["family"] == "D" and data["rank"] == 5
    assert sorted(map(tuple, data["edges"])) == sorted(g.edges)
    assert tuple(data["iota"]) == g.iota
