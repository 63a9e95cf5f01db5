# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled closure kernel.

Same traversal as ``pure.closure`` (same BFS order, same indices), with
matrices held as raw int64 bytes.  Entries are range-checked so that silent
int64 overflow is impossible; valid reflection-matrix entries stay tiny.
"""

import array

from cpython.bytes cimport PyBytes_AsString, PyBytes_FromStringAndSize
from libc.stdint cimport int64_t
from libc.string cimport memcpy

from ..errors import CapExceededError

DEF ENTRY_LIMIT = 1099511627776  # 2**40


def closure(int n, adjacency, gen_seqs, long long cap):
    cdef int nn = n * n
    cdef int k = len(gen_seqs)
    cdef int g, v, a, b, t
    cdef long long i, j, size
    cdef int64_t s

    # Flatten adjacency and generator sequences into C arrays.
    adj_off_py = [0]
    adj_flat_py = []
    for v in range(n):
        adj_flat_py.extend(adjacency[v])
        adj_off_py.append(len(adj_flat_py))
    seq_off_py = [0]
    seq_flat_py = []
    for g in range(k):
        seq_flat_py.extend(gen_seqs[g])
        seq_off_py.append(len(seq_flat_py))

    adj_flat_arr = array.array("i", adj_flat_py or [0])
    adj_off_arr = array.array("i", adj_off_py)
    seq_flat_arr = array.array("i", seq_flat_py or [0])
    seq_off_arr = array.array("i", seq_off_py)
    cdef int[::1] adj_flat = adj_flat_arr
    cdef int[::1] adj_off = adj_off_arr
    cdef int[::1] seq_flat = seq_flat_arr
    cdef int[::1] seq_off = seq_off_arr

    buf_arr = array.array("q", bytes(8 * nn))
    cdef int64_t[::1] buf = buf_arr

    for a in range(n):
        buf[a * n + a] = 1
    ident = PyBytes_FromStringAndSize(<char*> &buf[0], 8 * nn)

    keys = [ident]
    cdef dict index = {ident: 0}
    lengths = [0]
    parent = [-1]
    parent_gen = [-1]
    act = [[] for _ in range(k)]

    cdef bytes key
    cdef const char* src
    cdef object hit
    i = 0
    size = 1
    while i < size:
        src = PyBytes_AsString(keys[i])
        for g in range(k):
            memcpy(&buf[0], src, 8 * nn)
            for t in range(seq_off[g], seq_off[g + 1]):
                v = seq_flat[t]
                for a in range(0, nn, n):
                    s = -buf[a + v]
                    for b in range(adj_off[v], adj_off[v + 1]):
                        s += buf[a + adj_flat[b]]
                    if s > ENTRY_LIMIT or s < -ENTRY_LIMIT:
                        raise OverflowError("matrix entry exceeded the checked 64-bit range")
                    buf[a + v] = s
            key = PyBytes_FromStringAndSize(<char*> &buf[0], 8 * nn)
            hit = index.get(key)
            if hit is None:
                if size >= cap:
                    raise CapExceededError(
                        f"enumeration cap {cap} exceeded after {size} elements",
                        partial_count=size,
                    )
                j = size
                keys.append(key)
                index[key] = j
                size += 1
                lengths.append(lengths[i] + 1)
                parent.append(i)
                parent_gen.append(g)
            else:
                j = <long long> hit
            act[g].append(j)
        i += 1

    return keys, lengths, parent, parent_gen, act
