"""The braid group of a folded graph: word problem and canonical names.

The group is the Artin-Tits group on generators a_i, one per folded vertex,
with the alternating relations  a_i a_j a_i ... = a_j a_i a_j ...  of length
m(i, j) read off the folded Coxeter labels.  Dropping the relations
a_i^2 = 1 from the folded Weyl group presentation is exactly what makes this
the braid group, and it is why tilting mutation, which satisfies the braid
relations but is not involutive at the complex level, is indexed by braid
words rather than Weyl elements.

Canonical names are left-greedy Garside normal forms Delta^p w_1 ... w_k:
the Garside element Delta is the positive lift of the longest folded Weyl
element, the simples are the positive lifts of all folded Weyl elements, and
adjacent factors satisfy the left-weighted condition L(w_{j+1}) <= R(w_j) on
descent sets.  Everything is computed from the folded Weyl group realized
inside the ambient one by the t-words; nothing is hard-coded per type.

Normal forms decide the word problem; the projection a_i -> t_i names the
underlying two-term object when one exists, and ``mu_of_braid`` walks the
mutation trajectory of a word, reporting where it leaves the two-term
window (prefixes whose normal form is no longer the lift of a single Weyl
element).
"""

from __future__ import annotations

import dataclasses
from typing import Optional

import numpy as np

from . import _kernel, silt2, weyl
from .dynkin import DynkinGraph, FoldedGraph, fold, weyl_order
from .errors import CapExceededError
from .weyl import WeylElement, WeylGroup

_SUBGROUP_CAP = 2_000_000


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the generators a_i and their inverses, stored as signed
    1-based folded vertex indices."""

    letters: tuple[int, ...]
    system: "BraidSystem" = dataclasses.field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.letters)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def inverse_letters(self) -> tuple[int, ...]:
        return tuple(-x for x in reversed(self.letters))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclasses.dataclass(frozen=True)
class GarsideNF:
    """Left-greedy normal form Delta^p [w_1][w_2]...[w_k]; the simples are
    stored as indices into the folded Weyl table and are never the identity
    nor the full Garside element."""

    delta_power: int
    simples: tuple[int, ...]
    system: "BraidSystem" = dataclasses.field(compare=False, repr=False)

    def canonical_length(self) -> int:
        return len(self.simples)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.simples

    def is_simple_lift(self) -> bool:
        """Whether the element is the positive lift of a folded Weyl element,
        i.e. indexes a two-term object."""
        return (self.delta_power == 0 and len(self.simples) <= 1) or (
            self.delta_power == 1 and not self.simples
        )

    def to_word(self) -> BraidWord:
        """Render back as a braid word (inverse Garside letters for p < 0)."""
        sys = self.system
        letters: list[int] = []
        dword = sys.simple_word(sys.delta_index)
        if self.delta_power >= 0:
            letters.extend(dword * self.delta_power)
        else:
            letters.extend(tuple(-x for x in reversed(dword)) * (-self.delta_power))
        for s in self.simples:
            letters.extend(sys.simple_word(s))
        return BraidWord(tuple(letters), sys)

    def __str__(self) -> str:
        if not self.simples:
            body = "(empty)"
        else:
            body = "".join(
                "[" + "·".join(f"t{i}" for i in self.system.simple_word(s)) + "]"
                for s in self.simples
            )
        return f"Δ^{self.delta_power} · {body}"


@dataclasses.dataclass(frozen=True)
class MuWalk:
    """Result of walking a braid word through tilting mutation from the
    degree-0 stalk complex.

    ``shadow`` is the tilting complex of the Weyl projection, which is the
    actual endpoint only when the walk stayed two-term; ``exit_at`` is the
    1-based position of the first letter whose prefix leaves the two-term
    window, and ``final_two_term`` says whether the full word names a
    two-term object even if the trajectory left the window on the way.
    """

    shadow: silt2.TwoTermSilting
    two_term: bool
    exit_at: Optional[int]
    final_two_term: bool


class BraidSystem:
    """Garside machinery for the braid group of the folded graph of a Dynkin
    graph.  Builds the folded Weyl group (as matrices inside the ambient
    representation) once; all word-problem operations are table lookups."""

    def __init__(self, graph: DynkinGraph, cap: int = _SUBGROUP_CAP):
        self.graph = graph
        self.folded: FoldedGraph = fold(graph)
        k = self.folded.rank
        expected = weyl_order(self.folded.family, self.folded.rank)
        if expected > cap:
            raise CapExceededError(
                f"folded Weyl group of type {self.folded} has order {expected} > cap {cap}",
                partial_count=0,
            )
        # left multiplication by t_i is the reversed t-word as column ops
        gen_seqs = tuple(
            tuple(x - 1 for x in reversed(w)) for w in self.folded.t_words
        )
        table = _kernel.closure(graph.rank, graph.adjacency0, gen_seqs, cap)
        self._mats = table.mats
        self._len = table.lengths
        self._act = table.act          # _act[s0][x] = index of t_{s0+1} * x
        self._parent = table.parent
        self._parent_gen = table.parent_gen
        self.size = table.size
        self._index = {self._mats[i].tobytes(): i for i in range(self.size)}
        self.delta_index = int(np.argmax(self._len))
        assert int((self._len == self._len[self.delta_index]).sum()) == 1

        # right action x . t_s: the t-word as row ops, in word order
        adj = graph.adjacency0
        self._act_r = np.zeros((k, self.size), dtype=np.int64)
        for x in range(self.size):
            base = self._mats[x]
            for s0, w in enumerate(self.folded.t_words):
                m = base.copy()
                for letter in w:
                    weyl._rowop(m, letter - 1, adj)
                self._act_r[s0][x] = self._index[m.tobytes()]

        # inverses along the BFS tree: (t_s x)^(-1) = x^(-1) t_s
        self._inv = np.zeros(self.size, dtype=np.int64)
        for x in range(1, self.size):
            g0 = int(self._parent_gen[x])
            self._inv[x] = self._act_r[g0][self._inv[self._parent[x]]]

        d = self._mats[self.delta_index]
        self._left_comp = np.array(
            [self._index[(self._mats[self._inv[x]] @ d).tobytes()] for x in range(self.size)],
            dtype=np.int64,
        )
        self._tau = np.array(
            [self._index[(d @ self._mats[x] @ d).tobytes()] for x in range(self.size)],
            dtype=np.int64,
        )

        # descent bitmasks in the folded length
        self._ldesc = np.zeros(self.size, dtype=np.int64)
        self._rdesc = np.zeros(self.size, dtype=np.int64)
        for s0 in range(k):
            self._ldesc |= (self._len[self._act[s0]] < self._len).astype(np.int64) << s0
            self._rdesc |= (self._len[self._act_r[s0]] < self._len).astype(np.int64) << s0

        self._gen_idx = [int(self._act[s0][0]) for s0 in range(k)]
        self._slide_cache: dict[tuple[int, int], tuple[int, int]] = {}
        self._words: list[Optional[tuple[int, ...]]] = [None] * self.size
        self._group: Optional[WeylGroup] = None

    # -- words and parsing -------------------------------------------------

    @property
    def rank(self) -> int:
        return self.folded.rank

    def word(self, letters) -> BraidWord:
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or not 1 <= abs(x) <= self.rank:
                raise ValueError(f"letter {x} out of range for folded rank {self.rank}")
        return BraidWord(letters, self)

    def parse(self, text: str) -> BraidWord:
        """Parse whitespace-separated signed generator indices, e.g. '1 2 -1'."""
        letters = []
        for tok in text.split():
            try:
                letters.append(int(tok))
            except ValueError:
                raise ValueError(f"malformed token {tok!r}") from None
        return self.word(letters)

    def simple_word(self, idx: int) -> tuple[int, ...]:
        """Reduced folded word (1-based t-indices) of a folded Weyl element."""
        w = self._words[idx]
        if w is None:
            letters = []
            x = idx
            while self._parent[x] >= 0:
                letters.append(int(self._parent_gen[x]) + 1)
                x = self._parent[x]
            w = tuple(letters)
            self._words[idx] = w
        return w

    # -- Garside normal form ------------------------------------------------

    def _slide(self, u: int, v: int) -> tuple[int, int]:
        """Left-greedy normalization of an adjacent pair of simples: move
        generators from the head of v into the tail of u until
        L(v) is contained in R(u)."""
        key = (u, v)
        hit = self._slide_cache.get(key)
        if hit is not None:
            return hit
        uu, vv = u, v
        while True:
            movable = self._ldesc[vv] & ~self._rdesc[uu]
            if movable == 0:
                break
            s0 = int(movable & -movable).bit_length() - 1
            uu = int(self._act_r[s0][uu])
            vv = int(self._act[s0][vv])
        self._slide_cache[key] = (uu, vv)
        return uu, vv

    def _normalize(self, factors: list[int]) -> tuple[int, tuple[int, ...]]:
        facs = [f for f in factors if f != 0]
        i = 0
        while i + 1 < len(facs):
            u, v = self._slide(facs[i], facs[i + 1])
            if (u, v) == (facs[i], facs[i + 1]):
                i += 1
                continue
            facs[i] = u
            if v == 0:
                del facs[i + 1]
            else:
                facs[i + 1] = v
            i = max(i - 1, 0)
        p = 0
        while facs and facs[0] == self.delta_index:
            p += 1
            del facs[0]
        assert self.delta_index not in facs and 0 not in facs
        return p, tuple(facs)

    def _tau_pow(self, x: int, e: int) -> int:
        return int(self._tau[x]) if e % 2 else x

    def normal_form(self, a: BraidWord) -> GarsideNF:
        """Left-greedy Garside normal form; equal group elements get equal
        forms, and the form of a rendered form is itself."""
        gens = self._gen_idx
        factors: list[int] = []
        dpows: list[int] = []
        for letter in a.letters:
            t = gens[abs(letter) - 1]
            if letter > 0:
                factors.append(t)
                dpows.append(0)
            else:
                factors.append(int(self._left_comp[t]))
                dpows.append(-1)
        dp = 0
        for pos in range(len(factors) - 1, -1, -1):
            factors[pos] = self._tau_pow(factors[pos], dp)
            dp += dpows[pos]
        p, simples = self._normalize(factors)
        return GarsideNF(dp + p, simples, self)

    def words_equal(self, a: BraidWord, b: BraidWord) -> bool:
        na, nb = self.normal_form(a), self.normal_form(b)
        return na.delta_power == nb.delta_power and na.simples == nb.simples

    def split_positive(self, a: BraidWord) -> tuple[BraidWord, BraidWord]:
        """Write a = b^(-1) c with b, c positive words."""
        nf = self.normal_form(a)
        dword = self.simple_word(self.delta_index)
        tail = tuple(x for s in nf.simples for x in self.simple_word(s))
        if nf.delta_power >= 0:
            return self.word(()), self.word(dword * nf.delta_power + tail)
        return self.word(dword * (-nf.delta_power)), self.word(tail)

    # -- projection and mutation walks ---------------------------------------

    def project_to_weyl(self, a: BraidWord) -> WeylElement:
        """Image of the word under a_i -> t_i, as an ambient Weyl element of
        the fixed subgroup."""
        n = self.graph.rank
        mat = np.eye(n, dtype=np.int64)
        adj = self.graph.adjacency0
        for letter in a.letters:
            for x in self.folded.t_words[abs(letter) - 1]:
                weyl._rowop(mat, x - 1, adj)
        el = weyl.element_from_matrix(self.graph, weyl.GMatrix.from_numpy(mat))
        assert weyl.g_of_word(self.graph, el.word).to_numpy().tobytes() == mat.tobytes()
        return el

    def ambient_group(self, cap: int = weyl.DEFAULT_CAP) -> WeylGroup:
        if self._group is None:
            self._group = weyl.enumerate_group(self.graph, cap)
        return self._group

    def mu_of_braid(self, a: BraidWord, group: Optional[WeylGroup] = None) -> MuWalk:
        """Walk the word letterwise through tilting mutation from the complex
        of the identity, tracking where the braid trajectory leaves the
        two-term window."""
        if group is None:
            group = self.ambient_group()
        s = silt2.silting_of(group.element(group.identity_index))
        exit_at: Optional[int] = None
        nf = None
        for pos in range(1, len(a.letters) + 1):
            letter = a.letters[pos - 1]
            s, _ = silt2.tilting_mutate(s, abs(letter), self.folded)
            if exit_at is None:
                nf = self.normal_form(self.word(a.letters[:pos]))
                if not nf.is_simple_lift():
                    exit_at = pos
        full_nf = self.normal_form(a)
        shadow_el = self.project_to_weyl(a)
        assert s.w.g == shadow_el.g
        return MuWalk(
            shadow=s,
            two_term=exit_at is None,
            exit_at=exit_at,
            final_two_term=full_nf.is_simple_lift(),
        )
