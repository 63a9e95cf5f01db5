"""Integer-matrix calculus for Weyl groups of simply-laced Dynkin graphs.

Group elements are represented through the contragradient of the geometric
representation: the simple reflection at vertex i acts on the standard basis
by fixing e_j for j != i and sending e_i to -e_i + sum of e_k over neighbours
k of i.  A word s_{i_1}...s_{i_k} is represented by the reversed matrix
product r_{i_k}...r_{i_1}; with that convention the columns of the matrix of
w are exactly the g-vectors of the two-term silting complex indexed by w, so
the matrix both names the group element and carries the silting data.

Useful consequences used throughout:

* the map w -> matrix is an antihomomorphism: mat(uv) = mat(v) @ mat(u);
* left multiplication by s_i in the group is an elementary *column*
  operation on matrices, right multiplication an elementary *row* operation;
* row j of mat(w) holds the simple-root coordinates of w(alpha_j), so
  ``row j >= 0``  iff  ``l(w s_j) > l(w)``  (sign-coherence of roots).

Enumeration is a breadth-first closure run by :mod:`twosilt._kernel`; BFS
depth equals Coxeter length.
"""

from __future__ import annotations

import dataclasses
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence

import numpy as np

from . import _kernel
from .errors import InvariantError

if TYPE_CHECKING:
    from .dynkin import DynkinGraph, FoldedGraph

DEFAULT_CAP = 1_000_000

_MAX_WALK = 500  # > number of positive roots for every supported rank


@dataclasses.dataclass(frozen=True)
class GMatrix:
    """Invertible integer matrix of a Weyl element; column i is the g-vector
    attached to vertex i."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "GMatrix":
        return GMatrix(tuple(tuple(1 if a == b else 0 for b in range(n)) for a in range(n)))

    @staticmethod
    def from_numpy(mat: np.ndarray) -> "GMatrix":
        return GMatrix(tuple(tuple(int(x) for x in row) for row in mat))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def column(self, i: int) -> tuple[int, ...]:
        """Column for vertex label i (1-based)."""
        return tuple(row[i - 1] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(i) for i in range(1, self.n + 1)]

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        n = self.n
        o = other.rows
        return GMatrix(tuple(
            tuple(sum(self.rows[a][c] * o[c][b] for c in range(n)) for b in range(n))
            for a in range(n)
        ))

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.n
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for c in range(n - 1):
            if m[c][c] == 0:
                for r in range(c + 1, n):
                    if m[r][c] != 0:
                        m[c], m[r] = m[r], m[c]
                        sign = -sign
                        break
                else:
                    return 0
            for r in range(c + 1, n):
                for k in range(c + 1, n):
                    m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) // prev
                m[r][c] = 0
            prev = m[c][c]
        return sign * m[n - 1][n - 1]

    def to_json(self) -> list[list[int]]:
        """Column-major serialization."""
        return [list(self.column(i)) for i in range(1, self.n + 1)]


def reflection_matrix(graph, i: int) -> GMatrix:
    """Matrix of the simple reflection at vertex i (1-based label)."""
    n = graph.rank
    if not 1 <= i <= n:
        raise IndexError(f"vertex {i} out of range for rank {n}")
    i0 = i - 1
    nbrs = set(graph.adjacency0[i0])
    rows = []
    for a in range(n):
        row = [1 if a == b else 0 for b in range(n)]
        row[i0] = -1 if a == i0 else (1 if a in nbrs else 0)
        rows.append(tuple(row))
    return GMatrix(tuple(rows))


def _colop(mat: np.ndarray, v0: int, adjacency) -> None:
    """In place: right multiplication by the reflection at vertex v0."""
    nbrs = adjacency[v0]
    col = -mat[:, v0]
    for u in nbrs:
        col = col + mat[:, u]
    mat[:, v0] = col


def _rowop(mat: np.ndarray, v0: int, adjacency) -> None:
    """In place: left multiplication by the reflection at vertex v0."""
    for u in adjacency[v0]:
        mat[u] += mat[v0]
    mat[v0] = -mat[v0]


def g_of_word(graph, word: Iterable[int]) -> GMatrix:
    """Matrix of the word s_{i_1}...s_{i_k}: the reversed reflection product.

    The word need not be reduced; the empty word gives the identity.
    """
    n = graph.rank
    adjacency = graph.adjacency0
    mat = np.eye(n, dtype=np.int64)
    for i in word:
        if not 1 <= i <= n:
            raise IndexError(f"vertex {i} out of range for rank {n}")
        # appending a letter on the right of the word multiplies on the left
        _rowop(mat, i - 1, adjacency)
    return GMatrix.from_numpy(mat)


def iota_matrix(iota: Sequence[int]) -> GMatrix:
    """Permutation matrix with column j equal to e_{iota(j)} (1-based)."""
    n = len(iota)
    return GMatrix(tuple(
        tuple(1 if iota[b] == a + 1 else 0 for b in range(n)) for a in range(n)
    ))


def iota_conjugate(iota: Sequence[int], g: GMatrix) -> GMatrix:
    """Conjugation M_iota @ g @ M_iota; an involution, and a pure index
    permutation: entry (a, b) comes from (iota(a), iota(b))."""
    return GMatrix(tuple(
        tuple(g.rows[iota[a] - 1][iota[b] - 1] for b in range(g.n)) for a in range(g.n)
    ))


def _right_ascent(mat: np.ndarray, j0: int) -> bool:
    # row j0 carries w(alpha_j); the root is positive iff no entry is negative
    return bool((mat[j0] >= 0).all())


def longest_element(graph) -> GMatrix:
    """Matrix of the longest element, by the greedy ascent walk."""
    n = graph.rank
    adjacency = graph.adjacency0
    mat = np.eye(n, dtype=np.int64)
    for _ in range(_MAX_WALK):
        for j0 in range(n):
            if _right_ascent(mat, j0):
                _rowop(mat, j0, adjacency)
                break
        else:
            return GMatrix.from_numpy(mat)
    raise InvariantError("ascent walk did not terminate; graph is not Dynkin")


def word_from_matrix(graph, g: GMatrix) -> tuple[int, ...]:
    """A reduced word for the element with the given matrix.

    Strips right descents until the identity is reached; raises ValueError
    for matrices not in the group.
    """
    n = graph.rank
    if g.n != n:
        raise ValueError("matrix size does not match graph rank")
    adjacency = graph.adjacency0
    mat = g.to_numpy().copy()
    ident = np.eye(n, dtype=np.int64)
    suffix: list[int] = []
    for _ in range(_MAX_WALK):
        if (mat == ident).all():
            return tuple(reversed(suffix))
        for j0 in range(n):
            if (mat[j0] <= 0).all():  # right descent; rows of valid elements are sign-coherent
                _rowop(mat, j0, adjacency)
                suffix.append(j0 + 1)
                break
        else:
            raise ValueError("matrix is not in the Weyl group of this graph")
    raise ValueError("matrix is not in the Weyl group of this graph")


@dataclasses.dataclass(frozen=True)
class WeylElement:
    """A group element: its matrix, one reduced word, and the length.

    Elements produced by :func:`enumerate_group` also carry the owning group
    and their index in it.
    """

    graph: "DynkinGraph"
    g: GMatrix
    word: tuple[int, ...] = dataclasses.field(compare=False)
    length: int = dataclasses.field(compare=False)
    group: Optional["WeylGroup"] = dataclasses.field(default=None, compare=False, repr=False)
    index: Optional[int] = dataclasses.field(default=None, compare=False)

    def __str__(self) -> str:
        return "e" if not self.word else "·".join(f"s{i}" for i in self.word)

    def to_json(self) -> dict:
        return {"word": list(self.word), "length": self.length, "matrix": self.g.to_json()}


def element_from_matrix(graph, g: GMatrix) -> WeylElement:
    """Wrap a matrix as a WeylElement, recovering a reduced word by descent
    stripping (no enumeration needed)."""
    word = word_from_matrix(graph, g)
    return WeylElement(graph=graph, g=g, word=word, length=len(word))


class WeylGroup:
    """A fully enumerated Weyl group.

    Elements are keyed by their matrices; the element at index 0 is the
    identity, lengths are BFS depths, and ``act[i0][x]`` is the index of
    s_{i0+1} * (element x).  Iteration order of :meth:`elements` is
    lexicographic on flattened matrix entries, independent of how the BFS
    frontier was scheduled.
    """

    def __init__(self, graph, table: _kernel.ClosureTable, cap: int):
        self.graph = graph
        self.cap = cap
        self._t = table
        self.mats = table.mats
        self.lengths = table.lengths
        self.act = table.act
        self.index: dict[bytes, int] = {
            self.mats[i].tobytes(): i for i in range(table.size)
        }
        self._words: list[Optional[tuple[int, ...]]] = [None] * table.size
        self._fixed: Optional[np.ndarray] = None
        self._iota_relabel: Optional[np.ndarray] = None
        self._canon: Optional[np.ndarray] = None

    @property
    def order(self) -> int:
        return self._t.size

    def __len__(self) -> int:
        return self._t.size

    # -- element access -------------------------------------------------

    def word_of(self, idx: int) -> tuple[int, ...]:
        w = self._words[idx]
        if w is None:
            letters = []
            x = idx
            parent = self._t.parent
            parent_gen = self._t.parent_gen
            while parent[x] >= 0:
                letters.append(int(parent_gen[x]) + 1)
                x = parent[x]
            w = tuple(letters)
            self._words[idx] = w
        return w

    def element(self, idx: int) -> WeylElement:
        return WeylElement(
            graph=self.graph,
            g=GMatrix.from_numpy(self.mats[idx]),
            word=self.word_of(idx),
            length=int(self.lengths[idx]),
            group=self,
            index=idx,
        )

    def index_of(self, g: GMatrix | np.ndarray) -> int:
        mat = g.to_numpy() if isinstance(g, GMatrix) else np.asarray(g, dtype=np.int64)
        try:
            return self.index[mat.tobytes()]
        except KeyError:
            raise ValueError("matrix is not an element of this group") from None

    def act_left(self, i: int, idx: int) -> int:
        """Index of s_i * (element idx)."""
        return int(self.act[i - 1][idx])

    def mult(self, u: int, v: int) -> int:
        """Index of the product (element u) * (element v)."""
        return self.index[(self.mats[v] @ self.mats[u]).tobytes()]

    @property
    def identity_index(self) -> int:
        return 0

    @property
    def w0_index(self) -> int:
        top = int(self.lengths.max())
        cand = np.flatnonzero(self.lengths == top)
        if len(cand) != 1:
            raise InvariantError("longest element is not unique")
        return int(cand[0])

    @property
    def w0(self) -> WeylElement:
        return self.element(self.w0_index)

    # -- canonical order -------------------------------------------------

    def canonical_order(self) -> np.ndarray:
        if self._canon is None:
            flat = self.mats.reshape(self.order, -1)
            # lexicographic on matrix entries, first entry most significant
            self._canon = np.lexsort(flat.T[::-1])
        return self._canon

    def elements(self) -> Iterator[WeylElement]:
        for idx in self.canonical_order():
            yield self.element(int(idx))

    # -- the Nakayama involution on elements ------------------------------

    def iota_fixed_indices(self) -> np.ndarray:
        """Indices of elements whose matrix is fixed by conjugation with
        the permutation matrix of iota."""
        if self._fixed is None:
            perm = np.array([i - 1 for i in self.graph.iota], dtype=np.int64)
            conj = self.mats[:, perm][:, :, perm]
            self._fixed = np.flatnonzero((conj == self.mats).all(axis=(1, 2)))
        return self._fixed

    def iota_relabel_indices(self) -> np.ndarray:
        """Array mapping x to the index of the element whose word is the
        letterwise iota-relabelling of the word of x (computed along the BFS
        tree, independently of matrix conjugation)."""
        if self._iota_relabel is None:
            iota = self.graph.iota
            out = np.zeros(self.order, dtype=np.int64)
            parent = self._t.parent
            parent_gen = self._t.parent_gen
            for x in range(1, self.order):
                g0 = int(parent_gen[x])
                out[x] = self.act[iota[g0] - 1][out[parent[x]]]
            self._iota_relabel = out
        return self._iota_relabel

    # -- weak order -------------------------------------------------------

    def covers(self, w: WeylElement) -> list[tuple[int, str]]:
        """For each vertex i, whether s_i shifts w up or down in length."""
        idx = w.index if w.index is not None else self.index_of(w.g)
        out = []
        for i in range(1, self.graph.rank + 1):
            j = self.act_left(i, idx)
            out.append((i, "up" if self.lengths[j] > self.lengths[idx] else "down"))
        return out


def enumerate_group(graph, cap: int = DEFAULT_CAP) -> WeylGroup:
    """Breadth-first enumeration of the whole group; raises
    :class:`~twosilt.errors.CapExceededError` past the cap."""
    if cap < 1:
        raise ValueError("cap must be positive")
    gen_seqs = tuple((i0,) for i0 in range(graph.rank))
    table = _kernel.closure(graph.rank, graph.adjacency0, gen_seqs, cap)
    return WeylGroup(graph, table, cap)


def fixed_subgroup(group: WeylGroup) -> list[WeylElement]:
    """All elements fixed by the iota action, in canonical order."""
    fixed = set(int(i) for i in group.iota_fixed_indices())
    return [group.element(int(i)) for i in group.canonical_order() if int(i) in fixed]


def matrix_order(g: GMatrix, limit: int = 100) -> int:
    """Multiplicative order of an integer matrix (guarded)."""
    ident = GMatrix.identity(g.n)
    p = g
    for k in range(1, limit + 1):
        if p == ident:
            return k
        p = p @ g
    raise InvariantError(f"matrix order exceeds {limit}")


@dataclasses.dataclass(frozen=True)
class PresentationReport:
    """Outcome of checking that the folded generators present the expected
    Coxeter group and generate exactly the iota-fixed subgroup."""

    ok: bool
    subgroup_order: int
    expected_order: int
    coxeter_ok: bool
    matches_fixed_subgroup: bool
    mismatches: tuple[str, ...] = ()


def verify_folded_presentation(group: WeylGroup, folded: "FoldedGraph") -> PresentationReport:
    """Check the folded generators t_i against the folded Coxeter data.

    Verifies (i) the subgroup generated by the t_i equals the iota-fixed
    subgroup, (ii) the order of t_i t_j is the folded Coxeter label m(i, j)
    for every pair, (iii) the subgroup order is the order of the folded Weyl
    group.  Failures are reported, not raised.
    """
    from .dynkin import weyl_order

    graph = group.graph
    mismatches: list[str] = []

    t_mats = [g_of_word(graph, w) for w in folded.t_words]
    k = len(t_mats)
    coxeter_ok = True
    for a in range(k):
        for b in range(k):
            expected = folded.coxeter_label(a + 1, b + 1)
            got = matrix_order(t_mats[b] @ t_mats[a]) if a != b else matrix_order(t_mats[a] @ t_mats[a])
            if got != expected:
                coxeter_ok = False
                mismatches.append(f"order of t{a+1}t{b+1} is {got}, label says {expected}")

    # closure of the subgroup generated by the t_i, as ambient indices
    seen = {group.identity_index}
    frontier = [group.identity_index]
    while frontier:
        nxt = []
        for x in frontier:
            for w in folded.t_words:
                y = x
                for letter in reversed(w):
                    y = group.act_left(letter, y)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt

    expected_order = weyl_order(folded.family, folded.rank)
    fixed = set(int(i) for i in group.iota_fixed_indices())
    matches = seen == fixed
    if not matches:
        mismatches.append(
            f"t-subgroup has {len(seen)} elements, fixed subgroup has {len(fixed)}"
        )
    if len(seen) != expected_order:
        mismatches.append(f"t-subgroup order {len(seen)} != |W({folded.family}{folded.rank})| = {expected_order}")

    ok = coxeter_ok and matches and len(seen) == expected_order
    return PresentationReport(
        ok=ok,
        subgroup_order=len(seen),
        expected_order=expected_order,
        coxeter_ok=coxeter_ok,
        matches_fixed_subgroup=matches,
        mismatches=tuple(mismatches),
    )
