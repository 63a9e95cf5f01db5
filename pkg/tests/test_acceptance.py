"""Acceptance suite.

One test per criterion, each printing a pass line with the measured
quantities (run pytest with -s to see them).  Tolerances are exact
combinatorial equalities; the two timed criteria assert their wall-clock
budgets (60 s for the count sweep, 1 s for the worked quiver example,
5 min for the module-level cross-validation).
"""

import random
import time

import numpy as np
import pytest

import twosilt as ts
from twosilt import oracle, silt2, weyl
from twosilt.braid import BraidSystem

from helpers_braid import class_representative

CRITERION_1_TABLE = [
    ("A", 2, 6, 2),
    ("A", 3, 24, 8),
    ("A", 4, 120, 8),
    ("A", 5, 720, 48),
    ("A", 6, 5040, 48),
    ("D", 4, 192, 192),
    ("D", 5, 1920, 384),
    ("E", 6, 51840, 1152),
]


def test_criterion_1_counts(groups):
    start = time.perf_counter()
    for family, rank, n_silt, n_tilt in CRITERION_1_TABLE:
        graph = ts.build_dynkin(family, rank)
        group = ts.enumerate_group(graph)
        assert group.order == n_silt, (family, rank)
        assert len(group.iota_fixed_indices()) == n_tilt, (family, rank)
        folded = ts.fold(graph)
        assert ts.weyl_order(folded.family, folded.rank) == n_tilt
        groups(family, rank)      # warm the shared cache for later criteria
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"\ncriterion 1 PASS: counts exact on 8 types in {elapsed:.2f}s")


def test_criterion_2_a3_example(groups):
    groups("A", 3, "linear")
    start = time.perf_counter()
    _, group = groups("A", 3, "linear")
    quiver = silt2.hasse(group)
    assert len(quiver.nodes) == 24
    assert set(quiver.degrees()) == {3}
    assert len(quiver.source_positions()) == 1
    assert len(quiver.sink_positions()) == 1
    assert quiver.nodes[quiver.source_positions()[0]].w.length == 0
    assert quiver.nodes[quiver.sink_positions()[0]].w.length == 6
    assert sum(1 for n in quiver.nodes if n.is_tilting) == 8
    restricted = silt2.hasse(group, restrict_tilting=True)
    assert len(restricted.nodes) == 8
    assert set(restricted.degrees()) == {2}
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"criterion 2 PASS: worked example reproduced in {elapsed:.3f}s")


def test_criterion_3_g_matrix_identities(groups):
    checked = 0
    for family, rank, _, _ in CRITERION_1_TABLE:
        graph, group = groups(family, rank)
        perm = np.array([i - 1 for i in graph.iota])
        conj = group.mats[:, perm][:, :, perm]
        relabeled = group.iota_relabel_indices()
        assert (group.mats[relabeled] == conj).all(), (family, rank)
        g0 = group.mats[group.w0_index]
        lhs = np.einsum("ij,njk,kl->nil", g0, group.mats, g0)
        assert (lhs == conj).all(), (family, rank)
        checked += group.order
    print(f"criterion 3 PASS: both identities on {checked} elements, 0 failures")


def test_criterion_4_folded_presentations(groups):
    for family, rank, _, n_tilt in CRITERION_1_TABLE:
        graph, group = groups(family, rank)
        report = ts.verify_folded_presentation(group, ts.fold(graph))
        assert report.ok, (family, rank, report.mismatches)
        assert report.subgroup_order == n_tilt
    print("criterion 4 PASS: folded Coxeter presentations exact on 8 types")


def test_criterion_5_oracle_cross_validation():
    start = time.perf_counter()
    report2 = oracle.verify(ts.build_dynkin("A", 2))
    assert report2.algebra_dim == 4
    assert len(report2.elements) == 6
    assert report2.stt_count == 6
    assert all(e.g_matrix_match for e in report2.elements)
    assert all(e.nu_stable == e.iota_fixed for e in report2.elements)

    report3 = oracle.verify(ts.build_dynkin("A", 3, "linear"))
    assert report3.algebra_dim == 10
    assert len(report3.elements) == 24
    assert report3.stt_count == 24
    assert all(e.g_matrix_match for e in report3.elements)
    assert all(e.nu_stable == e.iota_fixed for e in report3.elements)
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    print(f"criterion 5 PASS: oracle agrees on A2 and A3 in {elapsed:.1f}s")


def test_criterion_6_end_dimensions():
    cases = 0
    for family, rank, labeling, dim in [("A", 2, "figure1", 4), ("A", 3, "linear", 10)]:
        graph = ts.build_dynkin(family, rank, labeling)
        A = oracle.build_algebra(graph)
        group = ts.enumerate_group(graph)
        for idx in group.iota_fixed_indices():
            word = group.element(int(idx)).word
            assert oracle.end_dimension(A, word) == dim, word
            cases += 1
    assert cases == 10
    print(f"criterion 6 PASS: end dimension equals dim Lambda in all {cases} cases")


def _positive_sweep(system, max_len):
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (i,) for w in frontier for i in range(1, system.rank + 1)]
        words.extend(frontier)
    return words


def test_criterion_7_braid_word_problem():
    systems = {
        "B2": BraidSystem(ts.build_dynkin("A", 3, "linear")),
        "B3": BraidSystem(ts.build_dynkin("A", 5)),
    }
    total = 0
    for name, system in systems.items():
        by_class = {}
        for w in _positive_sweep(system, 6):
            rep = class_representative(w, system.folded.coxeter_label)
            nf = system.normal_form(system.word(w))
            by_class.setdefault((len(w), rep), set()).add(nf)
            total += 1
        # oracle classes and normal forms induce the same partition
        for nfs in by_class.values():
            assert len(nfs) == 1
        per_length: dict[int, list] = {}
        for (length, _), nfs in by_class.items():
            per_length.setdefault(length, []).append(next(iter(nfs)))
        for nfs in per_length.values():
            assert len(set(nfs)) == len(nfs)

    rng = random.Random(20240)
    recombined = 0
    for _ in range(500):
        name = rng.choice(["B2", "B3"])
        system = systems[name]
        letters = [rng.choice([1, -1]) * rng.randint(1, system.rank)
                   for _ in range(rng.randint(0, 8))]
        word = system.word(letters)
        b, c = system.split_positive(word)
        assert b.is_positive() and c.is_positive()
        recomb = system.word(b.inverse_letters() + c.letters)
        assert system.words_equal(word, recomb)
        assert system.words_equal(system.word(b.letters + word.letters), c)
        assert system.project_to_weyl(word).g == system.project_to_weyl(recomb).g
        recombined += 1
    print(f"criterion 7 PASS: {total} positive words against the rewrite oracle, "
          f"{recombined} signed recombinations, 0 disagreements")


def test_criterion_8_involutions_and_closure(groups):
    for family, rank, _, n_tilt in CRITERION_1_TABLE:
        graph, group = groups(family, rank)
        everything = np.arange(group.order)
        for i0 in range(graph.rank):
            assert (group.act[i0][group.act[i0]] == everything).all(), (family, rank)
        folded = ts.fold(graph)
        report = silt2.closure_check(group, folded)
        assert report.ok, (family, rank, report.messages)
        assert report.orbit_size == n_tilt
        assert report.transitive and report.faithful and report.involutions_ok
    print("criterion 8 PASS: involutions, transitivity, faithfulness on 8 types")
