"""Module-level ground truth for the matrix classification.

Everything here recomputes, from the explicit algebra, quantities that the
matrix calculus predicts: g-matrices from actual minimal presentations,
Nakayama stability from an explicit isomorphism search, support tau-tilting
data from ideal closure, and endomorphism rings of materialized two-term
complexes (chain maps modulo null-homotopies).  Agreement with the
Weyl-group layer is the acceptance evidence.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

import numpy as np

from .. import weyl
from ..errors import InvariantError, OracleCapError
from . import ideals, linalg, modules
from .algebra import AlgebraRep, build_algebra

STT_TYPES = (("A", 1), ("A", 2), ("A", 3))


def g_matrix_oracle(A: AlgebraRep, word) -> np.ndarray:
    """g-matrix of the two-term complex of w, from minimal presentations.

    Column i is the g-vector of e_i I_w when that piece is nonzero, and
    minus the unit vector at iota(i) when it vanishes (the projective
    shifted summand sits at the Nakayama image)."""
    return g_matrix_of_ideal(A, ideals.ideal_of_word(A, word))


def g_matrix_of_ideal(A: AlgebraRep, ideal: ideals.Ideal) -> np.ndarray:
    graph = A.graph
    n = graph.rank
    cols = np.zeros((n, n), dtype=np.int64)
    for i in graph.vertices:
        pc = ideals.piece(A, ideal, i)
        if pc.is_zero():
            cols[graph.iota_of(i) - 1, i - 1] = -1
        else:
            cols[:, i - 1] = modules.min_presentation(pc).g_vector()
    return cols


def nu_stable_check(A: AlgebraRep, word) -> bool:
    """Whether nu(I_w) is isomorphic to I_w, decided at the module level."""
    ideal = ideals.ideal_of_word(A, word)
    m = ideals.ideal_module(A, ideal, tag="I_w")
    if m.is_zero():
        # the zero ideal is trivially nu-stable (w = w0 case)
        return True
    return modules.isomorphic(m, modules.nu(m))


def nu_g_matrix(A: AlgebraRep, word) -> np.ndarray:
    """g-matrix of the support tau-tilting module nu(I_w), assembled from
    the nu-images of the pieces; locating it in the group identifies the
    element w' with nu(I_w) = I_{w'}."""
    graph = A.graph
    n = graph.rank
    ideal = ideals.ideal_of_word(A, word)
    cols = np.zeros((n, n), dtype=np.int64)
    for i in graph.vertices:
        pc = ideals.piece(A, ideal, i)
        j = graph.iota_of(i)
        if pc.is_zero():
            cols[i - 1, j - 1] = -1
        else:
            cols[:, j - 1] = modules.min_presentation(modules.nu(pc)).g_vector()
    return cols


@dataclasses.dataclass
class SupportTauPair:
    """A support tau-tilting pair discovered by ideal closure."""

    module: modules.ModuleRep
    proj_part: tuple[int, ...]        # vertices i with e_i I = 0
    g_vectors: np.ndarray             # full g-matrix, columns over vertices
    ideal: ideals.Ideal

    @property
    def summand_count(self) -> int:
        return len([i for i in self.module.algebra.graph.vertices
                    if not ideals.piece(self.module.algebra, self.ideal, i).is_zero()])


def enumerate_stt(A: AlgebraRep) -> list[SupportTauPair]:
    """Closure enumeration of the ideal semigroup, with each member verified
    to be support tau-tilting: tau-rigidity, vanishing Homs from the
    projective part, and summand count plus projective count equal to the
    rank; deduplication is by canonical subspace."""
    if (A.graph.family, A.graph.rank) not in STT_TYPES:
        raise OracleCapError(
            f"support tau-tilting enumeration beyond {STT_TYPES} is not attempted"
        )
    graph = A.graph
    n = graph.rank
    gens = [ideals.ideal_gen(A, i) for i in graph.vertices]
    start = ideals.full_ideal(A)
    found: dict[tuple, ideals.Ideal] = {start.key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for g in gens:
                new = ideals.ideal_mult(A, cur, g)
                if new.key() not in found:
                    found[new.key()] = new
                    nxt.append(new)
        frontier = nxt

    out = []
    for ideal in found.values():
        m = ideals.ideal_module(A, ideal, tag="I")
        pieces = {i: ideals.piece(A, ideal, i) for i in graph.vertices}
        proj_part = tuple(i for i in graph.vertices if pieces[i].is_zero())
        # Hom(P, X) = 0 for the projective part: the corresponding right
        # weights must vanish
        for i in proj_part:
            j = graph.iota_of(i)
            if m.dimension_vector()[j - 1] != 0:
                raise InvariantError(f"Hom(P_{j}, I) != 0 for a vanishing piece e_{i}I")
        if not modules.tau_rigid_check(m):
            raise InvariantError("ideal in the closure is not tau-rigid")
        count = 0
        for i, pc in pieces.items():
            if pc.is_zero():
                continue
            parts = modules.decompose(pc)
            if len(parts) != 1:
                raise InvariantError(f"piece e_{i}I is decomposable")
            count += 1
        if count + len(proj_part) != n:
            raise InvariantError("summand count plus projective part is not the rank")
        out.append(SupportTauPair(
            module=m,
            proj_part=proj_part,
            g_vectors=g_matrix_of_ideal(A, ideal),
            ideal=ideal,
        ))
    return out


def tau_rigid_check(A: AlgebraRep, m: modules.ModuleRep) -> bool:
    return modules.tau_rigid_check(m)


# -- endomorphism dimension of the two-term complex ---------------------------


def _hom_flat_basis(m: modules.ModuleRep, n: modules.ModuleRep) -> np.ndarray:
    homs = modules.hom_space(m, n)
    if not homs:
        return np.zeros((n.dim * m.dim, 0), dtype=np.int64)
    return np.stack([h.reshape(-1) for h in homs], axis=1)


def end_dimension(A: AlgebraRep, word) -> int:
    """dim End of the two-term complex (P1 -> P0) + (shifted projectives),
    computed as chain maps modulo null-homotopies.

    The input word must name an iota-fixed element (a tilting complex);
    the caller is expected to have checked that.
    """
    graph = A.graph
    p = A.p
    ideal = ideals.ideal_of_word(A, word)

    t1_parts: list[modules.ModuleRep] = []
    t0_parts: list[modules.ModuleRep] = []
    dmaps: list[tuple[int, int, np.ndarray]] = []   # (t1 slot, t0 slot, map)
    for i in graph.vertices:
        pc = ideals.piece(A, ideal, i)
        if pc.is_zero():
            t1_parts.append(modules.projective_module(A, graph.iota_of(i)))
        else:
            pres = modules.min_presentation(pc)
            dmaps.append((len(t1_parts), len(t0_parts), pres.d))
            t1_parts.append(pres.p1)
            t0_parts.append(pres.p0)

    t1 = modules.direct_sum(A, t1_parts, tag="T^-1")
    t0 = modules.direct_sum(A, t0_parts, tag="T^0")
    off1 = np.cumsum([0] + [m.dim for m in t1_parts])
    off0 = np.cumsum([0] + [m.dim for m in t0_parts])
    d = np.zeros((t0.dim, t1.dim), dtype=np.int64)
    for s1, s0, mp in dmaps:
        d[off0[s0]:off0[s0] + mp.shape[0], off1[s1]:off1[s1] + mp.shape[1]] = mp % p

    # chain maps: pairs (f1, f0) of module endomorphisms with d f1 = f0 d
    b1 = _hom_flat_basis(t1, t1)
    b0 = _hom_flat_basis(t0, t0)
    k1, k0 = b1.shape[1], b0.shape[1]
    rows = t0.dim * t1.dim
    constraint = np.zeros((rows, k1 + k0), dtype=np.int64)
    for a in range(k1):
        f1 = b1[:, a].reshape(t1.dim, t1.dim)
        constraint[:, a] = linalg.mmul(d, f1, p).reshape(-1)
    for a in range(k0):
        f0 = b0[:, a].reshape(t0.dim, t0.dim)
        constraint[:, k1 + a] = (-linalg.mmul(f0, d, p)).reshape(-1) % p
    chain = linalg.nullspace(constraint, p)          # coords in (b1, b0)

    # null-homotopies h: T^0 -> T^-1 give chain maps (h d, d h)
    bh = _hom_flat_basis(t0, t1)
    if bh.shape[1]:
        imgs = []
        for a in range(bh.shape[1]):
            h = bh[:, a].reshape(t1.dim, t0.dim)
            f1 = linalg.mmul(h, d, p).reshape(-1)
            f0 = linalg.mmul(d, h, p).reshape(-1)
            c1 = linalg.solve(b1, f1, p) if k1 else np.zeros(0, dtype=np.int64)
            c0 = linalg.solve(b0, f0, p) if k0 else np.zeros(0, dtype=np.int64)
            imgs.append(np.concatenate([c1, c0]))
        htp = np.stack(imgs, axis=1)
        hrank = linalg.rank(htp, p)
    else:
        hrank = 0
    return int(chain.shape[1] - hrank)


# -- full verification report -------------------------------------------------


@dataclasses.dataclass
class ElementRecord:
    word: tuple[int, ...]
    g_matrix_match: bool
    nu_stable: bool
    iota_fixed: bool
    end_dim: Optional[int]

    def to_json(self) -> dict:
        return {
            "word": list(self.word),
            "g_matrix_match": self.g_matrix_match,
            "nu_stable": self.nu_stable,
            "iota_fixed": self.iota_fixed,
            "end_dim": self.end_dim,
        }


@dataclasses.dataclass
class OracleReport:
    graph_json: dict
    algebra_dim: int
    elements: list[ElementRecord]
    stt_count: Optional[int]
    expected_count: int

    @property
    def nu_stable_count(self) -> int:
        return sum(1 for e in self.elements if e.nu_stable)

    @property
    def all_pass(self) -> bool:
        counts_ok = self.stt_count is None or self.stt_count == self.expected_count
        return counts_ok and all(
            e.g_matrix_match
            and (e.nu_stable == e.iota_fixed)
            and (e.end_dim is None or e.end_dim == self.algebra_dim)
            for e in self.elements
        )

    def to_json(self) -> dict:
        return {
            "graph": self.graph_json,
            "algebra_dim": self.algebra_dim,
            "elements": [e.to_json() for e in self.elements],
            "summary": {
                "count": len(self.elements),
                "expected_count": self.expected_count,
                "stt_count": self.stt_count,
                "nu_stable_count": self.nu_stable_count,
                "end_dim_expected": self.algebra_dim,
                "all_pass": self.all_pass,
            },
        }


def verify(graph, p: int = linalg.DEFAULT_PRIME, with_stt: bool = True,
           group: Optional[weyl.WeylGroup] = None) -> OracleReport:
    """Run the whole oracle suite on one graph.

    For every group element: the module-level g-matrix must equal the
    reflection product, nu-stability must match iota-fixedness, and for the
    fixed elements the endomorphism dimension of the materialized complex
    must equal dim Lambda.
    """
    A = build_algebra(graph, p)
    if group is None:
        group = weyl.enumerate_group(graph)
    fixed = set(int(i) for i in group.iota_fixed_indices())

    # ideals along the BFS tree: I_{s_i w} = I_i I_w at each length increase
    ideal_of: dict[int, ideals.Ideal] = {0: ideals.full_ideal(A)}
    order = sorted(range(group.order), key=lambda x: int(group.lengths[x]))
    gens = {i: ideals.ideal_gen(A, i) for i in graph.vertices}
    for idx in order:
        if idx == 0:
            continue
        par = int(group._t.parent[idx])
        gen = int(group._t.parent_gen[idx]) + 1
        ideal_of[idx] = ideals.ideal_mult(A, gens[gen], ideal_of[par])

    records = []
    for idx in order:
        el = group.element(idx)
        ideal = ideal_of[idx]
        gm = g_matrix_of_ideal(A, ideal)
        match = bool((gm == group.mats[idx]).all())
        m = ideals.ideal_module(A, ideal)
        stable = True if m.is_zero() else modules.isomorphic(m, modules.nu(m))
        is_fixed = idx in fixed
        ed = end_dimension(A, el.word) if is_fixed else None
        records.append(ElementRecord(
            word=el.word,
            g_matrix_match=match,
            nu_stable=stable,
            iota_fixed=is_fixed,
            end_dim=ed,
        ))

    stt_count = None
    if with_stt and (graph.family, graph.rank) in STT_TYPES:
        stt_count = len(enumerate_stt(A))
    return OracleReport(
        graph_json=graph.to_json(),
        algebra_dim=A.dim,
        elements=records,
        stt_count=stt_count,
        expected_count=group.order,
    )
