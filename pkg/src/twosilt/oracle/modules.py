"""Right modules over an explicit algebra: presentations, translates, Homs.

A module is a based vector space with one weight (vertex) per basis vector
and one action matrix per algebra basis element; ``act[b] @ x`` is x . b_b.
Module maps respect weights, so every Hom solver works blockwise per vertex
with constraints only from the arrow generators.

Minimal projective presentations are built from projective covers of tops;
the translate tau is transpose-then-dual through the opposite algebra, and
nu is the dual of Hom(-, the regular module).  Direct-summand decomposition
finds idempotent endomorphisms through factored minimal polynomials of
(seeded) random endomorphisms, which splits every decomposable module with
overwhelming probability over a 15-bit prime; an undecided module raises.
"""

from __future__ import annotations

import dataclasses
from typing import Optional, Sequence

import numpy as np
import sympy

from ..errors import InvariantError
from . import linalg
from .algebra import AlgebraRep

_DECOMP_TRIES = 64


@dataclasses.dataclass
class ModuleRep:
    """A right module: weights per basis vector and action matrices."""

    algebra: AlgebraRep
    vtx: np.ndarray                     # [d] 1-based vertex of each basis vector
    act: np.ndarray                     # [algebra.dim, d, d]
    tag: str = ""

    @property
    def dim(self) -> int:
        return len(self.vtx)

    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(int((self.vtx == i).sum()) for i in self.algebra.graph.vertices)

    def weight_coords(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.vtx == i)

    def is_zero(self) -> bool:
        return self.dim == 0

    def check_axioms(self) -> bool:
        """Action respects unit, idempotent split, and multiplication."""
        A, p = self.algebra, self.algebra.p
        d = self.dim
        ident = np.zeros((d, d), dtype=np.int64)
        for k in range(d):
            ident[k, k] = 1
        tot = np.zeros((d, d), dtype=np.int64)
        for i, e in enumerate(A.idempotents):
            tot = (tot + self.act[e]) % p
            want = np.zeros((d, d), dtype=np.int64)
            coords = self.weight_coords(i + 1)
            want[coords, coords] = 1
            if not (self.act[e] % p == want).all():
                return False
        if not (tot == ident).all():
            return False
        for a in range(A.dim):
            for b in range(A.dim):
                lhs = linalg.mmul(self.act[b], self.act[a], p)      # x . (ab)
                rhs = np.einsum("w,wij->ij", A.mult[a, b], self.act) % p
                if not (lhs == rhs).all():
                    return False
        return True


def zero_module(A: AlgebraRep, tag: str = "0") -> ModuleRep:
    return ModuleRep(A, np.zeros(0, dtype=np.int64), np.zeros((A.dim, 0, 0), dtype=np.int64), tag)


def regular_module(A: AlgebraRep) -> ModuleRep:
    """The algebra as a right module over itself."""
    return ModuleRep(A, A.tgt.copy(), A.right_mult % A.p, tag="A")


def projective_module(A: AlgebraRep, i: int) -> ModuleRep:
    """The indecomposable projective e_i A."""
    rows = np.flatnonzero(A.src == i)
    act = A.right_mult[:, rows][:, :, rows] % A.p
    return ModuleRep(A, A.tgt[rows].copy(), np.ascontiguousarray(act), tag=f"P{i}")


def simple_module(A: AlgebraRep, i: int) -> ModuleRep:
    act = np.zeros((A.dim, 1, 1), dtype=np.int64)
    act[A.idempotent(i)] = 1
    return ModuleRep(A, np.array([i], dtype=np.int64), act, tag=f"S{i}")


def projective_sum(A: AlgebraRep, verts: Sequence[int], tag: str = "") -> ModuleRep:
    """Direct sum of indecomposable projectives at the given vertices."""
    return direct_sum(A, [projective_module(A, i) for i in verts], tag or "P(" + ",".join(map(str, verts)) + ")")


def direct_sum(A: AlgebraRep, parts: Sequence[ModuleRep], tag: str = "") -> ModuleRep:
    if not parts:
        return zero_module(A, tag)
    d = sum(m.dim for m in parts)
    vtx = np.concatenate([m.vtx for m in parts]) if d else np.zeros(0, dtype=np.int64)
    act = np.zeros((A.dim, d, d), dtype=np.int64)
    off = 0
    for m in parts:
        act[:, off:off + m.dim, off:off + m.dim] = m.act
        off += m.dim
    return ModuleRep(A, vtx, act, tag or "⊕".join(m.tag for m in parts))


def _pure_columns(parent: ModuleRep, span: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Weight-pure basis columns of the subspace spanned by ``span`` (which
    must be closed under the idempotent actions, e.g. any submodule span)."""
    A, p = parent.algebra, parent.algebra.p
    cols = []
    weights = []
    for i in parent.algebra.graph.vertices:
        proj = linalg.mmul(parent.act[A.idempotent(i)], span, p)
        basis = linalg.row_space(proj.T, p).T
        if basis.shape[1]:
            cols.append(basis)
            weights.extend([i] * basis.shape[1])
    if not cols:
        return np.zeros((parent.dim, 0), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.hstack(cols), np.array(weights, dtype=np.int64)


def submodule(parent: ModuleRep, span: np.ndarray, tag: str = "") -> ModuleRep:
    """The submodule spanned by the given columns, with a weight-pure basis."""
    A, p = parent.algebra, parent.algebra.p
    basis, weights = _pure_columns(parent, span)
    if basis.shape[1] == 0:
        return zero_module(A, tag)
    act = np.zeros((A.dim, basis.shape[1], basis.shape[1]), dtype=np.int64)
    for b in range(A.dim):
        act[b] = linalg.solve(basis, linalg.mmul(parent.act[b], basis, p), p)
    return ModuleRep(A, weights, act, tag)


def quotient_module(parent: ModuleRep, span: np.ndarray, tag: str = "") -> ModuleRep:
    """parent / (submodule spanned by the given columns)."""
    A, p = parent.algebra, parent.algebra.p
    sub, _ = _pure_columns(parent, span)
    rr = linalg.row_space(sub.T, p)       # rows: basis of the subspace
    pivots = [int(np.flatnonzero(row)[0]) for row in rr]
    keep = np.array([c for c in range(parent.dim) if c not in set(pivots)], dtype=np.int64)
    # reduction x -> x - sum x[pivot] * rr_row, then restrict to kept coords
    proj = np.zeros((len(keep), parent.dim), dtype=np.int64)
    for k, c in enumerate(keep):
        proj[k, c] = 1
    for r, c in zip(range(rr.shape[0]), pivots):
        proj[:, c] = (proj[:, c] - rr[r][keep]) % p
    lift = np.zeros((parent.dim, len(keep)), dtype=np.int64)
    for k, c in enumerate(keep):
        lift[c, k] = 1
    act = np.zeros((A.dim, len(keep), len(keep)), dtype=np.int64)
    for b in range(A.dim):
        act[b] = linalg.mmul(proj, linalg.mmul(parent.act[b], lift, p), p)
    return ModuleRep(A, parent.vtx[keep].copy(), act, tag)


def dual_module(m: ModuleRep) -> ModuleRep:
    """Dual of a right module over A, as a right module over A^op (and vice
    versa); weights are kept, actions are transposed."""
    return ModuleRep(m.algebra.opposite(), m.vtx.copy(), np.ascontiguousarray(m.act.transpose(0, 2, 1)) % m.algebra.p, tag=f"D({m.tag})")


# -- Hom spaces ------------------------------------------------------------


def hom_space(m: ModuleRep, n: ModuleRep) -> list[np.ndarray]:
    """Basis of Hom(M, N), as full matrices [dim N, dim M].

    Module maps preserve weights, so the unknowns are the per-vertex blocks;
    the constraints come from the arrow basis elements only (they generate
    the algebra together with the idempotents).
    """
    A, p = m.algebra, m.algebra.p
    verts = A.graph.vertices
    mc = {i: m.weight_coords(i) for i in verts}
    nc = {i: n.weight_coords(i) for i in verts}
    sizes = {i: (len(nc[i]), len(mc[i])) for i in verts}
    offs = {}
    total = 0
    for i in verts:
        offs[i] = total
        total += sizes[i][0] * sizes[i][1]
    if total == 0:
        return []

    rows = []
    for b in A.arrow_basis:
        u, v = int(A.src[b]), int(A.tgt[b])
        bm = m.act[b][np.ix_(mc[v], mc[u])] % p
        bn = n.act[b][np.ix_(nc[v], nc[u])] % p
        nv, mv = sizes[v]
        nu_, mu = sizes[u]
        if nv * mu == 0:
            continue
        block = np.zeros((nv * mu, total), dtype=np.int64)
        if mv:
            block[:, offs[v]:offs[v] + nv * mv] = np.kron(np.eye(nv, dtype=np.int64), bm.T)
        if nu_:
            block[:, offs[u]:offs[u] + nu_ * mu] = (block[:, offs[u]:offs[u] + nu_ * mu]
                                                    - np.kron(bn, np.eye(mu, dtype=np.int64))) % p
        rows.append(block)
    stacked = np.vstack(rows) if rows else np.zeros((0, total), dtype=np.int64)
    basis = linalg.nullspace(stacked, p)

    out = []
    for k in range(basis.shape[1]):
        phi = np.zeros((n.dim, m.dim), dtype=np.int64)
        for i in verts:
            nv, mv = sizes[i]
            if nv * mv == 0:
                continue
            blk = basis[offs[i]:offs[i] + nv * mv, k].reshape(nv, mv)
            phi[np.ix_(nc[i], mc[i])] = blk
        out.append(phi)
    return out


def hom_dim(m: ModuleRep, n: ModuleRep) -> int:
    return len(hom_space(m, n))


# -- minimal projective presentations ---------------------------------------


@dataclasses.dataclass
class Presentation:
    """Minimal projective presentation P1 -> P0 -> X -> 0."""

    module: ModuleRep
    p0_verts: tuple[int, ...]
    p1_verts: tuple[int, ...]
    p0: ModuleRep
    p1: ModuleRep
    cover: np.ndarray      # [dim X, dim P0]
    d: np.ndarray          # [dim P0, dim P1]

    def g_vector(self) -> np.ndarray:
        n = self.module.algebra.graph.rank
        g = np.zeros(n, dtype=np.int64)
        for v in self.p0_verts:
            g[v - 1] += 1
        for v in self.p1_verts:
            g[v - 1] -= 1
        return g


def _top_lifts(m: ModuleRep) -> tuple[list[int], np.ndarray]:
    """Vertices (with multiplicity) and lifted generators of the top of M."""
    A, p = m.algebra, m.algebra.p
    if m.is_zero():
        return [], np.zeros((m.dim, 0), dtype=np.int64)
    rad_img = [linalg.mmul(m.act[b], np.eye(m.dim, dtype=np.int64), p) for b in A.radical_basis]
    span = np.hstack(rad_img) if rad_img else np.zeros((m.dim, 0), dtype=np.int64)
    verts: list[int] = []
    lifts = []
    for i in A.graph.vertices:
        coords = m.weight_coords(i)
        if len(coords) == 0:
            continue
        sub = span[coords]
        rr = linalg.row_space(sub.T, p)
        pivots = {int(np.flatnonzero(row)[0]) for row in rr}
        for k in range(len(coords)):
            if k not in pivots:
                v = np.zeros(m.dim, dtype=np.int64)
                v[coords[k]] = 1
                lifts.append(v)
                verts.append(i)
    lift_mat = np.array(lifts, dtype=np.int64).T if lifts else np.zeros((m.dim, 0), dtype=np.int64)
    return verts, lift_mat


def projective_cover(m: ModuleRep) -> tuple[list[int], ModuleRep, np.ndarray]:
    """(vertices, P, h) with h: P ->> M a projective cover."""
    A, p = m.algebra, m.algebra.p
    verts, lifts = _top_lifts(m)
    P = projective_sum(A, verts)
    h = np.zeros((m.dim, P.dim), dtype=np.int64)
    off = 0
    for c, i in enumerate(verts):
        rows = np.flatnonzero(A.src == i)
        for k, b in enumerate(rows):
            h[:, off + k] = linalg.mmul(m.act[b], lifts[:, c], p)
        off += len(rows)
    if linalg.rank(h, p) != m.dim:
        raise InvariantError("projective cover is not surjective")
    return verts, P, h


def min_presentation(m: ModuleRep) -> Presentation:
    A, p = m.algebra, m.algebra.p
    verts0, p0, h = projective_cover(m)
    ker = linalg.nullspace(h, p)
    # kernel as a module, keeping its basis columns in P0 coordinates
    kbasis, kweights = _pure_columns(p0, ker)
    kmod = ModuleRep(A, kweights, np.zeros((A.dim, kbasis.shape[1], kbasis.shape[1]), dtype=np.int64))
    for b in range(A.dim):
        if kbasis.shape[1]:
            kmod.act[b] = linalg.solve(kbasis, linalg.mmul(p0.act[b], kbasis, p), p)
    verts1, p1, h1 = projective_cover(kmod)
    d = linalg.mmul(kbasis, h1, p) if kbasis.shape[1] else np.zeros((p0.dim, p1.dim), dtype=np.int64)
    return Presentation(
        module=m,
        p0_verts=tuple(verts0),
        p1_verts=tuple(verts1),
        p0=p0,
        p1=p1,
        cover=h,
        d=d,
    )


# -- Auslander-Reiten translate and Nakayama functor -------------------------


def transpose_module(m: ModuleRep) -> ModuleRep:
    """Tr M: cokernel of the Hom(-, A)-transpose of a minimal presentation,
    as a right module over the opposite algebra."""
    A, p = m.algebra, m.algebra.p
    op = A.opposite()
    pres = min_presentation(m)
    p0_op = projective_sum(op, pres.p0_verts)
    p1_op = projective_sum(op, pres.p1_verts)

    # column offsets of each copy inside the projective sums
    def offsets(alg, verts):
        offs = []
        acc = 0
        for i in verts:
            offs.append(acc)
            acc += int((alg.src == i).sum())
        return offs

    off0 = offsets(A, pres.p0_verts)
    off1 = offsets(A, pres.p1_verts)
    off0_op = offsets(op, pres.p0_verts)
    off1_op = offsets(op, pres.p1_verts)

    # lambda[k][l] in e_{v_k} A e_{u_l}, read off the generator columns of d;
    # the transposed map sends y in Lambda e_{v_k} to y . lambda[k][l]
    tr = np.zeros((p1_op.dim, p0_op.dim), dtype=np.int64)
    for l, u in enumerate(pres.p1_verts):
        gen_col = pres.d[:, off1[l] + _idempotent_position(A, u)]
        cols_u = np.flatnonzero(A.tgt == u)
        for k, v in enumerate(pres.p0_verts):
            rows_k = np.flatnonzero(A.src == v)
            lam = np.zeros(A.dim, dtype=np.int64)
            lam[rows_k] = gen_col[off0[k]:off0[k] + len(rows_k)]
            cols_v = np.flatnonzero(A.tgt == v)
            for cc, c in enumerate(cols_v):
                prod = (lam @ A.mult[c]) % p
                tr[off1_op[l]:off1_op[l] + len(cols_u), off0_op[k] + cc] = prod[cols_u]
    return quotient_module(p1_op, tr, tag=f"Tr({m.tag})")


def _idempotent_position(A: AlgebraRep, i: int) -> int:
    rows = np.flatnonzero(A.src == i)
    return int(np.flatnonzero(rows == A.idempotent(i))[0])


def tau(m: ModuleRep) -> ModuleRep:
    """Auslander-Reiten translate: dual of the transpose."""
    if m.is_zero():
        return zero_module(m.algebra, "tau(0)")
    t = transpose_module(m)
    out = dual_module(t)
    out.tag = f"τ({m.tag})"
    return out


def tau_rigid_check(m: ModuleRep) -> bool:
    """Hom(M, tau M) = 0, by the intertwiner system."""
    if m.is_zero():
        return True
    t = tau(m)
    if t.is_zero():
        return True
    return hom_dim(m, t) == 0


def nu(m: ModuleRep) -> ModuleRep:
    """Nakayama functor: dual of Hom(M, A), using the left module structure
    of the Hom space."""
    A, p = m.algebra, m.algebra.p
    if m.is_zero():
        return zero_module(A, "nu(0)")
    blocks: list[tuple[int, np.ndarray]] = []     # (left weight, map into e_i A embedded in A)
    for i in A.graph.vertices:
        rows = np.flatnonzero(A.src == i)
        for phi in hom_space(m, projective_module(A, i)):
            full = np.zeros((A.dim, m.dim), dtype=np.int64)
            full[rows] = phi
            blocks.append((i, full))
    h = len(blocks)
    if h == 0:
        return zero_module(A, f"ν({m.tag})")
    flat = np.stack([b[1].reshape(-1) for b in blocks], axis=1)    # [dimA*dimM, h]
    lact = np.zeros((A.dim, h, h), dtype=np.int64)
    for b in range(A.dim):
        imgs = np.stack([
            linalg.mmul(A.left_mult[b], blk, p).reshape(-1) for _, blk in blocks
        ], axis=1)
        lact[b] = linalg.solve(flat, imgs, p)
    # dual of the left module: right action by transposes
    act = np.ascontiguousarray(lact.transpose(0, 2, 1)) % p
    vtx = np.array([w for w, _ in blocks], dtype=np.int64)
    return ModuleRep(A, vtx, act, tag=f"ν({m.tag})")


# -- isomorphism testing and decomposition -----------------------------------


def _min_poly(x: np.ndarray, p: int) -> list[int]:
    """Coefficients (low to high, monic) of the minimal polynomial of x."""
    d = x.shape[0]
    powers = [np.eye(d, dtype=np.int64).reshape(-1)]
    cur = np.eye(d, dtype=np.int64)
    for _ in range(d + 1):
        cur = linalg.mmul(cur, x, p)
        powers.append(cur.reshape(-1))
        stacked = np.stack(powers, axis=1)
        ns = linalg.nullspace(stacked, p)
        if ns.shape[1]:
            coeffs = ns[:, 0]
            lead = len(coeffs) - 1
            while coeffs[lead] == 0:
                lead -= 1
            inv = linalg.inv_mod(int(coeffs[lead]), p)
            return [int(c) * inv % p for c in coeffs[: lead + 1]]
    raise InvariantError("minimal polynomial not found")


def _eval_poly(coeffs: Sequence[int], x: np.ndarray, p: int) -> np.ndarray:
    d = x.shape[0]
    out = np.zeros((d, d), dtype=np.int64)
    for c in reversed(coeffs):
        out = (linalg.mmul(out, x, p) + int(c) * np.eye(d, dtype=np.int64)) % p
    return out


def _splitting_idempotent(x: np.ndarray, p: int) -> Optional[np.ndarray]:
    """An idempotent polynomial in x when its minimal polynomial has at
    least two coprime primary factors."""
    coeffs = _min_poly(x, p)
    T = sympy.Symbol("T")
    poly = sympy.Poly([c % p for c in reversed(coeffs)], T, modulus=p)
    factors = poly.factor_list()[1]
    if len(factors) < 2:
        return None
    f0, e0 = factors[0]
    part = sympy.Poly(f0 ** e0, T, modulus=p)
    rest = poly.quo(part)
    s, t, g = sympy.gcdex(part.as_expr(), rest.as_expr(), T, modulus=p)
    assert sympy.Poly(g, T, modulus=p).degree() == 0
    ginv = linalg.inv_mod(int(sympy.Poly(g, T, modulus=p).coeffs()[0]), p)
    proj_poly = sympy.Poly(t, T, modulus=p) * rest * ginv
    pc = [int(c) % p for c in reversed(proj_poly.all_coeffs())]
    e = _eval_poly(pc, x, p)
    if not (linalg.mmul(e, e, p) == e % p).all():
        return None
    if not e.any() or (e % p == np.eye(x.shape[0], dtype=np.int64)).all():
        return None
    return e % p


def decompose(m: ModuleRep, seed: int = 0) -> list[ModuleRep]:
    """Indecomposable direct summands (Fitting decomposition).

    Deterministic for a fixed seed.  Raises when a module with a
    noncommutative-looking endomorphism ring resists every splitting try,
    which does not happen for the modules handled here.
    """
    p = m.algebra.p
    if m.is_zero():
        return []
    ends = hom_space(m, m)
    if len(ends) == 1:
        return [m]
    rng = np.random.default_rng(seed + 7919 * m.dim)
    candidates = list(ends)
    for _ in range(_DECOMP_TRIES):
        coeffs = rng.integers(0, p, size=len(ends))
        candidates.append(sum(int(c) * e for c, e in zip(coeffs, ends)) % p)
    for x in candidates:
        e = _splitting_idempotent(x % p, p)
        if e is None:
            continue
        rest = (np.eye(m.dim, dtype=np.int64) - e) % p
        part1 = submodule(m, e, tag=m.tag + "'")
        part2 = submodule(m, rest, tag=m.tag + "''")
        if part1.dim == 0 or part2.dim == 0 or part1.dim + part2.dim != m.dim:
            raise InvariantError("idempotent did not split the module")
        return decompose(part1, seed) + decompose(part2, seed)
    # no splitting found: certify indecomposability by locality of End(M)
    if _endo_ring_is_local(ends, p):
        return [m]
    raise InvariantError(f"could not decide decomposition of {m.tag or 'module'}")


def _endo_ring_is_local(ends: list[np.ndarray], p: int) -> bool:
    """Whether the span of the given endomorphisms is a local ring.

    Computes the radical as the kernel of the regular trace form (valid since
    p far exceeds the dimension), then counts the simple factors of the
    semisimple quotient as the dimension of the Frobenius-fixed subspace:
    the quotient of a local ring is a finite division ring, hence a field,
    with exactly a one-dimensional fixed space.
    """
    h = len(ends)
    flat = np.stack([e.reshape(-1) for e in ends], axis=1)
    struct = np.zeros((h, h, h), dtype=np.int64)
    for a in range(h):
        prods = np.stack(
            [linalg.mmul(ends[a], ends[b], p).reshape(-1) for b in range(h)], axis=1
        )
        struct[a] = linalg.solve(flat, prods, p).T
    # regular representation and trace form
    left = struct.transpose(0, 2, 1) % p          # left[a] @ y = coords of e_a * y
    tr_left = np.array([int(np.trace(left[a]) % p) for a in range(h)], dtype=np.int64)
    gram = np.einsum("abw,w->ab", struct, tr_left) % p
    rad = linalg.nullspace(gram, p)

    # pass to the semisimple quotient
    rr = linalg.row_space(rad.T, p)
    pivots = [int(np.flatnonzero(row)[0]) for row in rr]
    keep = [c for c in range(h) if c not in set(pivots)]
    if not keep:
        return True
    proj = np.zeros((len(keep), h), dtype=np.int64)
    for k, c in enumerate(keep):
        proj[k, c] = 1
    for r, c in zip(range(rr.shape[0]), pivots):
        proj[:, c] = (proj[:, c] - rr[r][np.array(keep)]) % p
    lift = np.zeros((h, len(keep)), dtype=np.int64)
    for k, c in enumerate(keep):
        lift[c, k] = 1

    hq = len(keep)

    def qmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # multiply two quotient elements through lifts, reduce mod radical
        prod = np.einsum("u,v,uvw->w", x, y, struct) % p
        return proj @ prod % p

    # Frobenius x -> x^p on the quotient, as a matrix in the kept basis
    frob = np.zeros((hq, hq), dtype=np.int64)
    for a in range(hq):
        acc = None
        base = np.eye(hq, dtype=np.int64)[a]
        e = p
        while e:
            if e & 1:
                acc = base if acc is None else qmul(lift @ acc % p, lift @ base % p)
            base = qmul(lift @ base % p, lift @ base % p)
            e >>= 1
        frob[:, a] = acc
    fixed = linalg.nullspace((frob - np.eye(hq, dtype=np.int64)) % p, p)
    return fixed.shape[1] == 1


def isomorphic(m: ModuleRep, n: ModuleRep, seed: int = 1) -> bool:
    """Module isomorphism over the prime field.

    Dimension vectors filter first; then a seeded search for an invertible
    intertwiner; a failure with equal g-vectors and equal summand data would
    raise rather than return a silent verdict.
    """
    p = m.algebra.p
    if m.dimension_vector() != n.dimension_vector():
        return False
    if m.dim == 0:
        return True
    homs = hom_space(m, n)
    if not homs:
        return False
    rng = np.random.default_rng(seed + 104729 * m.dim)
    for k in range(_DECOMP_TRIES):
        if k < len(homs):
            cand = homs[k]
        else:
            coeffs = rng.integers(0, p, size=len(homs))
            cand = sum(int(c) * h for c, h in zip(coeffs, homs)) % p
        if linalg.det(cand, p) != 0:
            return True
    gm = min_presentation(m).g_vector()
    gn = min_presentation(n).g_vector()
    if not (gm == gn).all():
        return False
    raise InvariantError("isomorphism test undecided")
