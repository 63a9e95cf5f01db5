"""Two-sided ideals of the algebra as canonical subspaces.

An ideal is stored as the reduced row-echelon basis of its coordinate space,
which doubles as a dedup key.  The generating ideals are I_i = A(1-e_i)A;
products are computed span-by-span.  Ideals are two-sided, so they split
into (source, target)-blocks, which gives weight-pure bases for the module
conversions.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .. import weyl
from . import linalg
from .algebra import AlgebraRep
from .modules import ModuleRep, submodule, regular_module


@dataclasses.dataclass(frozen=True)
class Ideal:
    algebra: AlgebraRep
    rows: tuple[tuple[int, ...], ...]     # RREF basis of the coordinate space

    @property
    def dim(self) -> int:
        return len(self.rows)

    def key(self) -> tuple:
        return self.rows

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.algebra.dim), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    def contains(self, vec: np.ndarray) -> bool:
        return linalg.in_row_space(self.matrix(), vec, self.algebra.p)


def _from_span(A: AlgebraRep, rows: np.ndarray) -> Ideal:
    rr = linalg.row_space(rows, A.p)
    return Ideal(A, tuple(tuple(int(x) for x in r) for r in rr))


def full_ideal(A: AlgebraRep) -> Ideal:
    return _from_span(A, np.eye(A.dim, dtype=np.int64))


def ideal_gen(A: AlgebraRep, i: int) -> Ideal:
    """I_i = A (1 - e_i) A: the span of all basis products through a vertex
    other than i."""
    vecs = []
    for x in range(A.dim):
        if int(A.tgt[x]) == i:
            continue
        for y in range(A.dim):
            if int(A.src[y]) == int(A.tgt[x]):
                vecs.append(A.mult[x, y])
    span = np.array(vecs, dtype=np.int64) if vecs else np.zeros((0, A.dim), np.int64)
    return _from_span(A, span)


def ideal_mult(A: AlgebraRep, left: Ideal, right: Ideal) -> Ideal:
    if left.dim == 0 or right.dim == 0:
        return _from_span(A, np.zeros((0, A.dim), dtype=np.int64))
    X = left.matrix()
    Y = right.matrix()
    t1 = np.einsum("au,uvw->avw", X, A.mult) % A.p
    prod = np.einsum("avw,bv->abw", t1, Y) % A.p
    return _from_span(A, prod.reshape(-1, A.dim))


def ideal_of_word(A: AlgebraRep, word) -> Ideal:
    """I_w = I_{i_1} ... I_{i_k} for a reduced word; rejects non-reduced
    input (checked against the Coxeter length of the product)."""
    word = tuple(word)
    g = weyl.g_of_word(A.graph, word)
    if len(weyl.word_from_matrix(A.graph, g)) != len(word):
        raise ValueError(f"word {word} is not reduced")
    out = full_ideal(A)
    for i in word:
        out = ideal_mult(A, out, ideal_gen(A, i))
    return out


def piece(A: AlgebraRep, ideal: Ideal, i: int) -> ModuleRep:
    """The right module e_i I (coordinates restricted to source-i rows)."""
    mat = ideal.matrix()
    if mat.shape[0] == 0:
        return submodule(regular_module(A), np.zeros((A.dim, 0), dtype=np.int64), tag=f"e{i}I")
    mask = (A.src == i)
    span = (mat * mask[None, :]) % A.p
    return submodule(regular_module(A), span.T, tag=f"e{i}I")


def ideal_module(A: AlgebraRep, ideal: Ideal, tag: str = "I") -> ModuleRep:
    return submodule(regular_module(A), ideal.matrix().T, tag=tag)
