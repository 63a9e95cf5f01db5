"""Simply-laced Dynkin graphs, the Nakayama involution, and graph folding.

Two vertex labelings are supported.  The default ``figure1`` labeling places
type A as  n ... 2 1 (n+1) ... (2n-1 or 2n),  type D as the fork 1, n onto 2
with the tail 2-3-...-(n-1), and type E with vertex 1 hanging off vertex 2 of
the chain 4-3-2-5-...-n.  The ``linear`` labeling (type A only) is the plain
path 1-2-...-n.

The involution iota is *defined* intrinsically: it is the permutation with
w0 s_i w0 = s_{iota(i)}, computed from the longest element.  The closed
per-family formulas are test assertions, not the definition, so everything
downstream is labeling-agnostic.

Folding quotients the graph by iota.  Folded vertices are the orbit
representatives (smallest label first); each carries a word t_i in the
ambient simple reflections, and the Coxeter label m(i, j) of a folded pair is
computed as the order of t_i t_j and then cross-checked against the expected
folded type:

    A_{2n-1}, A_{2n} -> B_n;  D_{2n} -> D_{2n};  D_{2n+1} -> B_{2n};
    E_6 -> F_4;  E_7 -> E_7;  E_8 -> E_8.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from . import weyl

FIGURE1 = "figure1"
LINEAR = "linear"


@dataclasses.dataclass(frozen=True)
class DynkinGraph:
    family: str
    rank: int
    labeling: str
    edges: tuple[tuple[int, int], ...]   # sorted pairs of 1-based labels
    iota: tuple[int, ...]                # iota[i-1] = image of vertex i

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def adjacency0(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency0(self.edges, self.rank)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(u + 1 for u in self.adjacency0[i - 1])

    def iota_of(self, i: int) -> int:
        return self.iota[i - 1]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def coxeter_label(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return 3 if self.has_edge(i, j) else 2

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "labeling": self.labeling,
            "edges": [list(e) for e in self.edges],
            "iota": list(self.iota),
        }


@functools.lru_cache(maxsize=None)
def _adjacency0(edges: tuple[tuple[int, int], ...], rank: int) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(rank)]
    for u, v in edges:
        adj[u - 1].append(v - 1)
        adj[v - 1].append(u - 1)
    return tuple(tuple(sorted(a)) for a in adj)


@dataclasses.dataclass(frozen=True)
class FoldedGraph:
    """Quotient of a Dynkin graph by iota, with Coxeter labels in {2, 3, 4}.

    Folded vertices are labeled 1..rank; ``orbit_reps[i-1]`` is the ambient
    orbit representative, ``t_words[i-1]`` the defining word in the ambient
    simple reflections, and ``e_t_supports[i-1]`` the ambient orbit
    {rep} or {rep, iota(rep)}.
    """

    family: str
    rank: int
    labels: tuple[tuple[int, ...], ...]       # full symmetric m-matrix, m[i][i] = 1
    t_words: tuple[tuple[int, ...], ...]
    e_t_supports: tuple[tuple[int, ...], ...]
    orbit_reps: tuple[int, ...]
    ambient: DynkinGraph

    def coxeter_label(self, i: int, j: int) -> int:
        return self.labels[i - 1][j - 1]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _figure1_edges(family: str, rank: int) -> tuple[tuple[int, int], ...]:
    if family == "A":
        n = (rank + 1) // 2
        seq = list(range(n, 0, -1)) + list(range(n + 1, rank + 1))
        pairs = zip(seq, seq[1:])
    elif family == "D":
        pairs = [(1, 2), (rank, 2)] + [(i, i + 1) for i in range(2, rank - 1)]
    else:  # E
        pairs = [(1, 2), (4, 3), (3, 2), (2, 5)] + [(i, i + 1) for i in range(5, rank)]
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _valid_type(family: str, rank: int) -> bool:
    return (
        (family == "A" and rank >= 1)
        or (family == "D" and rank >= 4)
        or (family == "E" and rank in (6, 7, 8))
    )


def build_dynkin(family: str, rank: int, labeling: str = FIGURE1) -> DynkinGraph:
    """Construct a Dynkin graph with its intrinsic Nakayama involution."""
    if not _valid_type(family, rank):
        raise ValueError(f"not a Dynkin type: {family}{rank}")
    if labeling not in (FIGURE1, LINEAR):
        raise ValueError(f"unknown labeling {labeling!r}")
    if labeling == LINEAR:
        if family != "A":
            raise ValueError("linear labeling is only defined for family A")
        edges = tuple((i, i + 1) for i in range(1, rank))
    else:
        edges = _figure1_edges(family, rank)
    skeleton = DynkinGraph(family, rank, labeling, edges, iota=tuple(range(1, rank + 1)))
    return dataclasses.replace(skeleton, iota=compute_iota(skeleton))


def compute_iota(graph: DynkinGraph) -> tuple[int, ...]:
    """The permutation with w0 s_i w0 = s_{iota(i)}, from the longest element."""
    w0 = weyl.longest_element(graph)
    refl = {weyl.reflection_matrix(graph, j): j for j in graph.vertices}
    iota = []
    for i in graph.vertices:
        conj = w0 @ weyl.reflection_matrix(graph, i) @ w0
        j = refl.get(conj)
        if j is None:
            raise ValueError("conjugation by w0 did not permute the reflections")
        iota.append(j)
    return tuple(iota)


_FOLD_ORDERS = {"E": {6: 51840, 7: 2903040, 8: 696729600}, "F": {4: 1152}}


def weyl_order(family: str, rank: int) -> int:
    """Order of the Weyl group of the given (possibly folded) type."""
    if family == "A":
        return math.factorial(rank + 1)
    if family == "B":
        return 2 ** rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    try:
        return _FOLD_ORDERS[family][rank]
    except KeyError:
        raise ValueError(f"unknown type {family}{rank}") from None


def coxeter_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Coxeter matrix of a type in families A/B/D/E/F under the default
    labeling; B has the 4-edge at 1-2, F_4 at 2-3."""
    if family in ("A", "D", "E"):
        graph = build_dynkin(family, rank, FIGURE1)
        return tuple(
            tuple(graph.coxeter_label(i, j) for j in graph.vertices) for i in graph.vertices
        )
    if family == "B":
        edges4 = {(1, 2)} if rank >= 2 else set()
    elif family == "F":
        if rank != 4:
            raise ValueError("family F has rank 4 only")
        edges4 = {(2, 3)}
    else:
        raise ValueError(f"unknown family {family!r}")
    path = {(i, i + 1) for i in range(1, rank)}
    rows = []
    for i in range(1, rank + 1):
        row = []
        for j in range(1, rank + 1):
            p = (min(i, j), max(i, j))
            row.append(1 if i == j else 4 if p in edges4 else 3 if p in path else 2)
        rows.append(tuple(row))
    return tuple(rows)


def _folded_type(family: str, rank: int) -> tuple[str, int]:
    if family == "A":
        return ("B", (rank + 1) // 2)
    if family == "D":
        return ("D", rank) if rank % 2 == 0 else ("B", rank - 1)
    return ("F", 4) if rank == 6 else ("E", rank)


@functools.lru_cache(maxsize=None)
def fold(graph: DynkinGraph) -> FoldedGraph:
    """Fold a Dynkin graph along its involution."""
    iota = graph.iota
    reps = sorted({min(i, iota[i - 1]) for i in graph.vertices})
    t_words = []
    supports = []
    for i in reps:
        j = iota[i - 1]
        if j == i:
            t_words.append((i,))
            supports.append((i,))
        elif graph.has_edge(i, j):
            t_words.append((i, j, i))
            supports.append((i, j))
        else:
            t_words.append((i, j))
            supports.append((i, j))

    k = len(reps)
    t_mats = [weyl.g_of_word(graph, w) for w in t_words]
    labels = []
    for a in range(k):
        row = []
        for b in range(k):
            row.append(weyl.matrix_order(t_mats[b] @ t_mats[a]) if a != b else 1)
        labels.append(tuple(row))
    labels = tuple(labels)

    fam, rk = _folded_type(graph.family, graph.rank)
    assert rk == k, f"folded rank {k} does not match type {fam}{rk}"
    assert labels == coxeter_matrix(fam, rk), "folded Coxeter labels do not match the folded type"
    return FoldedGraph(
        family=fam,
        rank=rk,
        labels=labels,
        t_words=tuple(t_words),
        e_t_supports=tuple(supports),
        orbit_reps=tuple(reps),
        ambient=graph,
    )
