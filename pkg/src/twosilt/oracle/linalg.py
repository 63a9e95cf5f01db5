"""Exact linear algebra over a prime field, on numpy int64 arrays.

All matrices hold entries in [0, p).  The default prime is large enough that
products of two entries fit comfortably in int64, and small enough that the
dimensions arising here (a few hundred) keep dot products far from overflow.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 32003


def asfield(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, p - 2, p)


def mmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = asfield(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hit = np.flatnonzero(m[r:, c])
        if len(hit) == 0:
            continue
        pr = r + int(hit[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * inv_mod(m[r, c], p)) % p
        other = np.flatnonzero(m[:, c])
        other = other[other != r]
        if len(other):
            m[other] = (m[other] - np.outer(m[other, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : a @ x = 0}, as columns."""
    a = asfield(a, p)
    rows, cols = a.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        basis[c, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-r[i, c]) % p
    return basis


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """One solution X of a @ X = b (b may have several columns); raises
    ValueError when inconsistent."""
    a = asfield(a, p)
    b = asfield(b, p)
    if b.ndim == 1:
        return solve(a, b[:, None], p)[:, 0]
    aug = np.hstack([a, b])
    r, pivots = rref(aug, p)
    ncols = a.shape[1]
    if any(c >= ncols for c in pivots):
        raise ValueError("inconsistent linear system")
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = r[i, ncols:]
    return x


def row_space(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space; rows are the basis."""
    if a.size == 0:
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 0), dtype=np.int64)
    r, _ = rref(a, p)
    return r


def in_row_space(basis_rref: np.ndarray, v: np.ndarray, p: int) -> bool:
    if basis_rref.shape[0] == 0:
        return not v.any()
    stacked = np.vstack([basis_rref, v % p])
    return rank(stacked, p) == basis_rref.shape[0]


def det(a: np.ndarray, p: int) -> int:
    """Determinant mod p by elimination."""
    m = asfield(a, p).copy()
    n = m.shape[0]
    d = 1
    for c in range(n):
        hit = np.flatnonzero(m[c:, c])
        if len(hit) == 0:
            return 0
        pr = c + int(hit[0])
        if pr != c:
            m[[c, pr]] = m[[pr, c]]
            d = (-d) % p
        d = (d * m[c, c]) % p
        inv = inv_mod(m[c, c], p)
        below = np.arange(c + 1, n)
        if len(below):
            factors = (m[below, c] * inv) % p
            m[below] = (m[below] - np.outer(factors, m[c])) % p
    return d
