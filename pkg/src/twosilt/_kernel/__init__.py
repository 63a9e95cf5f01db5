"""Closure kernel selection.

The breadth-first closure of the identity under reflection generators is the
hot loop of every enumeration in this package.  A compiled Cython kernel is
used when available; the pure-Python kernel in :mod:`twosilt._kernel.pure` is
the fallback and the reference semantics.  Set ``TWOSILT_PURE_KERNEL=1`` to
force the fallback (used by the kernel-equivalence tests and the benchmark).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import pure

KERNEL = "pure"
_impl = pure
if os.environ.get("TWOSILT_PURE_KERNEL") != "1":
    try:
        from . import _closure as _compiled

        _impl = _compiled
        KERNEL = "compiled"
    except ImportError:
        pass


@dataclass(frozen=True)
class ClosureTable:
    """Result of a closure run: element matrices plus the BFS tree and the
    left action of every generator."""

    n: int
    mats: np.ndarray        # [size, n, n] int64
    lengths: np.ndarray     # [size] int32, BFS depth
    parent: np.ndarray      # [size] int64, -1 for the identity
    parent_gen: np.ndarray  # [size] int32, generator used to reach the element
    act: np.ndarray         # [k, size] int64; act[g][x] = index of gen_g applied to x

    @property
    def size(self) -> int:
        return self.mats.shape[0]


def _to_mats(raw, n: int) -> np.ndarray:
    if raw and isinstance(raw[0], bytes):
        flat = np.frombuffer(b"".join(raw), dtype=np.int64)
    else:
        flat = np.array([e for m in raw for e in m], dtype=np.int64)
    return flat.reshape(len(raw), n, n)


def closure(n: int, adjacency, gen_seqs, cap: int, impl=None) -> ClosureTable:
    """Enumerate the closure of the identity under the generator sequences.

    ``adjacency`` is a tuple of 0-based neighbour tuples; each generator is a
    sequence of vertices whose elementary column operations are applied in
    order (right multiplication by the corresponding reflection product).
    """
    kern = impl if impl is not None else _impl
    raw, lengths, parent, parent_gen, act = kern.closure(
        n, tuple(adjacency), tuple(tuple(s) for s in gen_seqs), cap
    )
    return ClosureTable(
        n=n,
        mats=_to_mats(raw, n),
        lengths=np.asarray(lengths, dtype=np.int32),
        parent=np.asarray(parent, dtype=np.int64),
        parent_gen=np.asarray(parent_gen, dtype=np.int32),
        act=np.asarray(act, dtype=np.int64).reshape(len(gen_seqs), len(raw)),
    )
