"""Pure-Python closure kernel.

Enumerates the closure of the identity matrix under a set of generators,
where each generator is a sequence of elementary column operations

    col_v  <-  -col_v + sum(col_u for u adjacent to v)

i.e. right multiplication by a product of simple reflection matrices of the
contragradient geometric representation.  Matrices are kept as flat row-major
tuples of Python ints, so arithmetic can never overflow.

The compiled kernel in ``_closure.pyx`` implements the same traversal; both
must produce identical tables (same BFS order, same indices).
"""

from __future__ import annotations

from ..errors import CapExceededError


def apply_colops(mat: tuple, n: int, seq, adjacency) -> tuple:
    """Apply a sequence of elementary column operations to a flat matrix."""
    m = list(mat)
    for v in seq:
        nbrs = adjacency[v]
        for a in range(0, n * n, n):
            s = -m[a + v]
            for u in nbrs:
                s += m[a + u]
            m[a + v] = s
    return tuple(m)


def apply_rowops(mat: tuple, n: int, seq, adjacency) -> tuple:
    """Apply a sequence of elementary row operations (left multiplication
    by simple reflections, in the given order)."""
    m = list(mat)
    for v in seq:
        base = v * n
        for u in adjacency[v]:
            ub = u * n
            for b in range(n):
                m[ub + b] += m[base + b]
        for b in range(n):
            m[base + b] = -m[base + b]
    return tuple(m)


def closure(n: int, adjacency, gen_seqs, cap: int):
    """Breadth-first closure from the identity under the given generators.

    Returns (mats, lengths, parent, parent_gen, act) as plain Python lists:
      mats[x]       flat row-major matrix of element x,
      lengths[x]    BFS depth of x,
      parent[x]     index of the element x was first reached from (-1 for id),
      parent_gen[x] generator applied at that step (-1 for id),
      act[g][x]     index of the element obtained by applying generator g to x.
    """
    ident = tuple(1 if a == b else 0 for a in range(n) for b in range(n))
    mats = [ident]
    index = {ident: 0}
    lengths = [0]
    parent = [-1]
    parent_gen = [-1]
    act = [[] for _ in gen_seqs]

    i = 0
    while i < len(mats):
        m = mats[i]
        for g, seq in enumerate(gen_seqs):
            key = apply_colops(m, n, seq, adjacency)
            j = index.get(key)
            if j is None:
                if len(mats) >= cap:
                    raise CapExceededError(
                        f"enumeration cap {cap} exceeded after {len(mats)} elements",
                        partial_count=len(mats),
                    )
                j = len(mats)
                mats.append(key)
                index[key] = j
                lengths.append(lengths[i] + 1)
                parent.append(i)
                parent_gen.append(g)
            act[g].append(j)
        i += 1
    return mats, lengths, parent, parent_gen, act
