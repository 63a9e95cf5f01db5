"""Explicit preprojective algebras of small Dynkin graphs.

The algebra is the double-quiver path algebra modulo the two-sided ideal
generated by the sum over original arrows of aa* - a*a.  Because the
relations are homogeneous of path length two, the quotient is graded by path
length: each graded piece is computed by Gaussian elimination on the span of
all relation multiples, and the iteration stops at the first empty piece
(the algebra is generated in degree one, so everything above an empty grade
vanishes).  The surviving quotient basis consists of single path classes,
which keeps the structure constants sparse and readable.

Only small types are allowed; everything here is ground truth for the
matrix-level classification, so the guard is an explicit allow-list rather
than a soft heuristic.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Optional

import numpy as np

from ..errors import OracleCapError
from . import linalg

ALLOWED_TYPES = (("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4))
_MAX_GRADE = 24
_MAX_PATHS = 500_000


@dataclasses.dataclass(frozen=True)
class BasisElement:
    """A path class: grade, the representing path (arrow ids), endpoints."""

    index: int
    grade: int
    path: tuple[int, ...]
    source: int   # 1-based vertex
    target: int


class AlgebraRep:
    """Basis-and-structure-constants presentation of a preprojective algebra."""

    def __init__(self, graph, p, basis, mult, arrows):
        self.graph = graph
        self.p = p
        self.basis: tuple[BasisElement, ...] = tuple(basis)
        self.dim = len(self.basis)
        self.mult = mult                      # [dim, dim, dim] int64, mult[i, j] = vector of b_i b_j
        self.arrows = arrows                  # list of (src, tgt) 1-based, double quiver
        self.grades = np.array([b.grade for b in self.basis], dtype=np.int64)
        self.src = np.array([b.source for b in self.basis], dtype=np.int64)
        self.tgt = np.array([b.target for b in self.basis], dtype=np.int64)
        self.idempotents = tuple(
            next(b.index for b in self.basis if b.grade == 0 and b.source == i)
            for i in graph.vertices
        )
        self.arrow_basis = tuple(int(i) for i in np.flatnonzero(self.grades == 1))
        self.radical_basis = tuple(int(i) for i in np.flatnonzero(self.grades >= 1))
        self._opposite: Optional["AlgebraRep"] = None

    def idempotent(self, i: int) -> int:
        """Basis index of e_i."""
        return self.idempotents[i - 1]

    @functools.cached_property
    def right_mult(self) -> np.ndarray:
        """right_mult[b] @ x = coordinates of x . b_b."""
        return np.ascontiguousarray(self.mult.transpose(1, 2, 0))

    @functools.cached_property
    def left_mult(self) -> np.ndarray:
        """left_mult[b] @ x = coordinates of b_b . x."""
        return np.ascontiguousarray(self.mult.transpose(0, 2, 1))

    def unit(self) -> np.ndarray:
        u = np.zeros(self.dim, dtype=np.int64)
        for e in self.idempotents:
            u[e] = 1
        return u

    def opposite(self) -> "AlgebraRep":
        """Opposite algebra: same basis, reversed products and endpoints."""
        if self._opposite is None:
            op = AlgebraRep.__new__(AlgebraRep)
            op.graph = self.graph
            op.p = self.p
            op.basis = tuple(
                dataclasses.replace(b, source=b.target, target=b.source) for b in self.basis
            )
            op.dim = self.dim
            op.mult = np.ascontiguousarray(self.mult.transpose(1, 0, 2))
            op.arrows = [(t, s) for (s, t) in self.arrows]
            op.grades = self.grades
            op.src = self.tgt
            op.tgt = self.src
            op.idempotents = self.idempotents
            op.arrow_basis = self.arrow_basis
            op.radical_basis = self.radical_basis
            op._opposite = self
            self._opposite = op
        return self._opposite

    # -- structure checks (exercised by the test suite) ----------------------

    def check_associativity(self) -> bool:
        p = self.p
        lhs = np.einsum("abw,wcv->abcv", self.mult, self.mult) % p   # (ab)c
        rhs = np.einsum("bcw,awv->abcv", self.mult, self.mult) % p   # a(bc)
        return bool((lhs == rhs).all())

    def check_idempotents(self) -> bool:
        p = self.p
        for i, ei in enumerate(self.idempotents):
            for j, ej in enumerate(self.idempotents):
                prod = self.mult[ei, ej]
                want = np.zeros(self.dim, dtype=np.int64)
                if i == j:
                    want[ei] = 1
                if not (prod % p == want).all():
                    return False
        u = self.unit()
        for b in range(self.dim):
            vb = np.zeros(self.dim, dtype=np.int64)
            vb[b] = 1
            if not ((self.right_mult[b] @ u) % p == vb).all():
                return False
            if not ((self.left_mult[b] @ u) % p == vb).all():
                return False
        return True

    def socle_permutation(self) -> tuple[int, ...]:
        """For each vertex i, the vertex supporting the socle of e_i Lambda;
        the algebra is selfinjective with Nakayama permutation iota exactly
        when this is iota and each socle is one-dimensional."""
        out = []
        for i in self.graph.vertices:
            rows = np.flatnonzero(self.src == i)
            # x in e_i Lambda with x . rad = 0
            stack = np.vstack([
                (self.right_mult[b][:, rows]) % self.p for b in self.radical_basis
            ]) if self.radical_basis else np.zeros((0, len(rows)), dtype=np.int64)
            ker = linalg.nullspace(stack, self.p)
            if ker.shape[1] != 1:
                raise OracleCapError(f"socle of e_{i}A is not simple")
            support = rows[np.flatnonzero(ker[:, 0])]
            tgts = {int(self.tgt[k]) for k in support}
            if len(tgts) != 1:
                raise OracleCapError(f"socle of e_{i}A is not concentrated at one vertex")
            out.append(tgts.pop())
        return tuple(out)


def _double_quiver(graph):
    """Orient each edge low-to-high and double it; arrow 2e is the original,
    2e+1 its star."""
    arrows = []
    for (u, v) in graph.edges:
        arrows.append((u, v))
        arrows.append((v, u))
    return arrows


def build_algebra(graph, p: int = linalg.DEFAULT_PRIME) -> AlgebraRep:
    """Compute a basis of the preprojective algebra by graded elimination."""
    if (graph.family, graph.rank) not in ALLOWED_TYPES:
        raise OracleCapError(
            f"oracle algebra for {graph.family}{graph.rank} is beyond the size guard "
            f"(allowed: {', '.join(f + str(r) for f, r in ALLOWED_TYPES)})"
        )
    arrows = _double_quiver(graph)
    n_edges = len(graph.edges)

    # relation components rho_i: list of (coef, (arrow, arrow)) cycling at i
    rho: dict[int, list[tuple[int, tuple[int, int]]]] = {i: [] for i in graph.vertices}
    for e in range(n_edges):
        u, v = arrows[2 * e]
        rho[u].append((1, (2 * e, 2 * e + 1)))
        rho[v].append((-1, (2 * e + 1, 2 * e)))

    # paths per grade: tuples of arrow ids; grade 0 keyed by vertex
    paths: list[list[tuple[int, ...]]] = [[(-i,) for i in graph.vertices]]

    def path_source(pth: tuple[int, ...]) -> int:
        return -pth[0] if pth[0] < 0 else arrows[pth[0]][0]

    def path_target(pth: tuple[int, ...]) -> int:
        return -pth[0] if pth[0] < 0 else arrows[pth[-1]][1]

    basis: list[BasisElement] = []
    reducers: list[tuple[np.ndarray, list[int], dict[tuple, int], list[int]]] = []
    total_paths = 0

    grade = 0
    while grade <= _MAX_GRADE:
        plist = paths[grade]
        total_paths += len(plist)
        if total_paths > _MAX_PATHS:
            raise OracleCapError("path space exceeded the oracle cap")
        pindex = {pth: k for k, pth in enumerate(plist)}

        # span of all relation multiples left . rho_i . right inside this grade
        rel_vecs = []
        if grade >= 2:
            for a in range(grade - 1):
                b = grade - 2 - a
                for left in paths[a]:
                    i = path_target(left)
                    if not rho[i]:
                        continue
                    lpart = () if left[0] < 0 else left
                    for right in paths[b]:
                        if path_source(right) != i:
                            continue
                        rpart = () if right[0] < 0 else right
                        vec = np.zeros(len(plist), dtype=np.int64)
                        for coef, (t1, t2) in rho[i]:
                            vec[pindex[lpart + (t1, t2) + rpart]] = coef % p
                        rel_vecs.append(vec)
        rel = np.array(rel_vecs, dtype=np.int64) if rel_vecs else np.zeros((0, len(plist)), np.int64)
        rr, pivots = linalg.rref(rel, p)
        pivot_of = {c: r for r, c in enumerate(pivots)}
        free_cols = [c for c in range(len(plist)) if c not in pivot_of]

        for c in free_cols:
            pth = plist[c]
            basis.append(BasisElement(
                index=len(basis),
                grade=grade,
                path=() if pth[0] < 0 else pth,
                source=path_source(pth),
                target=path_target(pth),
            ))
        reducers.append((rr, pivots, pindex, free_cols))

        if grade > 0 and not free_cols:
            break
        nxt = []
        for pth in plist:
            t = path_target(pth)
            for aid, (u, v) in enumerate(arrows):
                if u == t:
                    nxt.append(((pth + (aid,)) if pth[0] >= 0 else (aid,)))
        paths.append(nxt)
        grade += 1
    else:
        raise OracleCapError("graded pieces did not terminate")

    max_grade = len(reducers) - 1

    def reduce_to_coords(vec: np.ndarray, g: int) -> np.ndarray:
        rr, pivots, _, free_cols = reducers[g]
        v = vec % p
        for r, c in enumerate(pivots):
            if v[c]:
                v = (v - v[c] * rr[r]) % p
        return v[free_cols]

    # global index per (grade, free position)
    offset = []
    acc = 0
    for g in range(max_grade + 1):
        offset.append(acc)
        acc += len(reducers[g][3])
    assert acc == len(basis)

    dim = len(basis)
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for x in basis:
        for y in basis:
            if x.target != y.source:
                continue
            g = x.grade + y.grade
            if g > max_grade:
                continue
            if x.grade == 0:
                cat = y.path if y.path else (-y.source,)
            elif y.grade == 0:
                cat = x.path
            else:
                cat = x.path + y.path
            _, _, pindex, free_cols = reducers[g]
            vec = np.zeros(len(pindex), dtype=np.int64)
            key = cat if (x.grade + y.grade > 0) else (-x.source,)
            vec[pindex[key]] = 1
            coords = reduce_to_coords(vec, g)
            nz = np.flatnonzero(coords)
            for k in nz:
                mult[x.index, y.index, offset[g] + k] = coords[k]

    return AlgebraRep(graph, p, basis, mult, arrows)
