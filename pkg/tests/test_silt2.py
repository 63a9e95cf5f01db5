import pytest

import twosilt as ts
from twosilt import silt2


def _group(groups, family, rank, labeling="figure1"):
    return groups(family, rank, labeling)


def test_silting_of_identity(groups):
    _, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.element(0))
    assert s.is_tilting
    assert str(s) == "e"


def test_silting_of_s1_not_tilting(groups):
    _, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.element(W.act_left(1, 0)))
    assert not s.is_tilting


def test_silting_of_s1s3_tilting(groups):
    _, W = groups("A", 3, "linear")
    idx = W.act_left(1, W.act_left(3, 0))
    s = silt2.silting_of(W.element(idx))
    assert s.is_tilting


def test_w0_columns_are_negative_units(groups):
    g, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.w0)
    assert s.is_tilting
    for i in g.vertices:
        col = list(s.g.column(i))
        expect = [0, 0, 0]
        expect[g.iota_of(i) - 1] = -1
        assert col == expect


def test_mutate_involution_and_directions(groups):
    _, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.element(0))
    s2, d = silt2.mutate(s, 2)
    assert d == "left" and s2.w.length == 1
    back, d2 = silt2.mutate(s2, 2)
    assert d2 == "right" and back == s
    top = silt2.silting_of(W.w0)
    for i in range(1, 4):
        _, d = silt2.mutate(top, i)
        assert d == "right"


def test_tilting_mutate_a2(groups):
    _, W = groups("A", 2)
    s = silt2.silting_of(W.element(0))
    s2, d = silt2.tilting_mutate(s, 1)
    assert d == "left"
    assert s2.w.index == W.w0_index          # t_1 = s1 s2 s1 is the longest element
    back, d2 = silt2.tilting_mutate(s2, 1)
    assert back == s and d2 == "right"


def test_tilting_mutate_two_step(groups):
    g, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.element(0))
    s2, d = silt2.tilting_mutate(s, 1)
    assert d == "left" and s2.w.length == 2
    assert s2.w.g == ts.g_of_word(g, (1, 3))


def test_tilting_mutate_requires_tilting(groups):
    _, W = groups("A", 3, "linear")
    s = silt2.silting_of(W.element(W.act_left(1, 0)))
    with pytest.raises(ValueError):
        silt2.tilting_mutate(s, 1)


def test_hasse_a3(groups):
    _, W = groups("A", 3, "linear")
    q = silt2.hasse(W)
    assert len(q.nodes) == 24
    assert set(q.degrees()) == {3}
    assert len(q.source_positions()) == 1
    assert len(q.sink_positions()) == 1
    src = q.nodes[q.source_positions()[0]]
    snk = q.nodes[q.sink_positions()[0]]
    assert src.w.length == 0
    assert snk.w.length == 6
    assert sum(1 for n in q.nodes if n.is_tilting) == 8


def test_hasse_a3_restricted(groups):
    _, W = groups("A", 3, "linear")
    q = silt2.hasse(W, restrict_tilting=True)
    assert len(q.nodes) == 8
    assert set(q.degrees()) == {2}
    assert all(n.is_tilting for n in q.nodes)


def test_hasse_a1(groups):
    _, W = groups("A", 1)
    q = silt2.hasse(W)
    assert len(q.nodes) == 2
    assert len(q.arrows) == 1
    a, b, gen = q.arrows[0]
    assert q.nodes[a].w.length == 0 and q.nodes[b].w.length == 1 and gen == 1


def test_hasse_acyclic(groups):
    _, W = groups("A", 3, "linear")
    q = silt2.hasse(W)
    # arrows strictly increase length, so the quiver is acyclic
    for a, b, _ in q.arrows:
        assert q.nodes[b].w.length == q.nodes[a].w.length + 1


def test_dot_output_deterministic(groups):
    _, W = groups("A", 2)
    q = silt2.hasse(W)
    dot = q.to_dot()
    assert dot == silt2.hasse(W).to_dot()
    assert dot.startswith("digraph")
    assert dot.count("shape=box") == 2
    assert '[label="1"]' in dot


@pytest.mark.parametrize("family,rank,labeling,orbit", [
    ("A", 2, "figure1", 2),
    ("A", 3, "linear", 8),
    ("A", 5, "figure1", 48),
    ("D", 4, "figure1", 192),
])
def test_closure_check(groups, family, rank, labeling, orbit):
    _, W = groups(family, rank, labeling)
    report = silt2.closure_check(W)
    assert report.ok, report.messages
    assert report.orbit_size == orbit
    assert report.transitive and report.faithful and report.involutions_ok


def test_tilting_count_is_folded_order(groups):
    for family, rank in [("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5)]:
        g, W = groups(family, rank)
        folded = ts.fold(g)
        assert len(W.iota_fixed_indices()) == ts.weyl_order(folded.family, folded.rank)


def test_folded_braid_relations_on_tilting(groups):
    # alternating tilting mutations of length m(i, j) agree from every start
    for family, rank, labeling in [("A", 2, "figure1"), ("A", 3, "linear"),
                                   ("A", 4, "figure1"), ("A", 5, "figure1"),
                                   ("D", 4, "figure1"), ("D", 5, "figure1")]:
        g, W = groups(family, rank, labeling)
        folded = ts.fold(g)
        for idx in W.iota_fixed_indices():
            start = silt2.silting_of(W.element(int(idx)))
            for i in folded.vertices:
                for j in folded.vertices:
                    if i >= j:
                        continue
                    m = folded.coxeter_label(i, j)
                    a = start
                    b = start
                    for k in range(m):
                        a, _ = silt2.tilting_mutate(a, i if k % 2 == 0 else j, folded)
                        b, _ = silt2.tilting_mutate(b, j if k % 2 == 0 else i, folded)
                    assert a == b


def test_folded_braid_relations_e6(groups):
    # same sweep on E6 at the index level (1152 tilting complexes, 6 pairs)
    g, W = groups("E", 6)
    folded = ts.fold(g)

    def t_apply(fi, idx):
        for letter in reversed(folded.t_words[fi - 1]):
            idx = W.act_left(letter, idx)
        return idx

    pairs = [(i, j) for i in folded.vertices for j in folded.vertices if i < j]
    for idx in W.iota_fixed_indices():
        for i, j in pairs:
            m = folded.coxeter_label(i, j)
            a = b = int(idx)
            for k in range(m):
                a = t_apply(i if k % 2 == 0 else j, a)
                b = t_apply(j if k % 2 == 0 else i, b)
            assert a == b


def test_ambient_length_additivity_along_t_words(groups):
    # the length change of t_i w is exactly the t-word length, for every
    # fixed w; this is what makes the letterwise mutation direction uniform
    for family, rank, labeling in [("A", 3, "linear"), ("A", 4, "figure1"),
                                   ("A", 5, "figure1"), ("D", 5, "figure1")]:
        g, W = groups(family, rank, labeling)
        folded = ts.fold(g)
        for idx in W.iota_fixed_indices():
            for fi, word in enumerate(folded.t_words, start=1):
                j = int(idx)
                for letter in reversed(word):
                    j = W.act_left(letter, j)
                assert abs(int(W.lengths[j]) - int(W.lengths[int(idx)])) == len(word)


def test_classification_json(groups):
    _, W = groups("A", 2)
    data = silt2.classification_json(W)
    assert data["counts"] == {"two_silt": 6, "two_tilt": 2}
    assert data["folded"] == {"family": "B", "rank": 1}
    assert len(data["elements"]) == 6
    assert sum(1 for e in data["elements"] if e["tilting"]) == 2
