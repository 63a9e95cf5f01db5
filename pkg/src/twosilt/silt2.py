"""Two-term silting and tilting complexes at the g-matrix level.

Every element w of an enumerated Weyl group indexes a two-term silting
complex; the complex is tilting exactly when the matrix of w is fixed by
conjugation with the involution's permutation matrix.  Elementary mutation
in direction i replaces w by s_i w; irreducible tilting mutation at a folded
vertex applies the whole t-word letterwise and stays inside the tilting
class.  The left/right direction of a mutation follows the length: left
mutation moves away from the identity (from the complex in degree 0 toward
its shift).

No chain complexes are materialized here; the g-matrix is a faithful key.
The module-level oracle builds the actual complexes on small types.
"""

from __future__ import annotations

import dataclasses
from typing import Optional

from .dynkin import FoldedGraph, fold, weyl_order
from .errors import InvariantError
from .weyl import WeylElement, WeylGroup


@dataclasses.dataclass(frozen=True)
class TwoTermSilting:
    """A two-term silting complex, keyed by its Weyl element."""

    w: WeylElement
    is_tilting: bool

    @property
    def g(self):
        return self.w.g

    def __str__(self) -> str:
        return str(self.w)


def _is_fixed(group: WeylGroup, idx: int) -> bool:
    iota = group.graph.iota
    if all(iota[i] == i + 1 for i in range(len(iota))):
        return True
    mat = group.mats[idx]
    return bool((mat[[i - 1 for i in iota]][:, [i - 1 for i in iota]] == mat).all())


def silting_of(w: WeylElement) -> TwoTermSilting:
    """Wrap a group element as its two-term silting complex."""
    if w.group is None or w.index is None:
        raise ValueError("element must come from an enumerated group")
    return TwoTermSilting(w=w, is_tilting=_is_fixed(w.group, w.index))


def mutate(s: TwoTermSilting, i: int) -> tuple[TwoTermSilting, str]:
    """Elementary silting mutation in direction i: returns the complex of
    s_i w and whether the step was a left or a right mutation."""
    group = s.w.group
    idx = s.w.index
    j = group.act_left(i, idx)
    direction = "left" if group.lengths[j] > group.lengths[idx] else "right"
    return silting_of(group.element(j)), direction


def tilting_mutate(s: TwoTermSilting, folded_i: int,
                   folded: Optional[FoldedGraph] = None) -> tuple[TwoTermSilting, str]:
    """Irreducible tilting mutation at a folded vertex.

    Applies the t-word of the folded vertex letterwise; the elementary steps
    all share one direction and the result is tilting again (both asserted:
    a violation would contradict the group action on tilting complexes).
    """
    if not s.is_tilting:
        raise ValueError("tilting mutation requires a tilting complex")
    group = s.w.group
    if folded is None:
        folded = fold(group.graph)
    t_word = folded.t_words[folded_i - 1]
    idx = s.w.index
    start_len = int(group.lengths[idx])
    directions = set()
    for letter in reversed(t_word):
        nxt = group.act_left(letter, idx)
        directions.add("left" if group.lengths[nxt] > group.lengths[idx] else "right")
        idx = nxt
    if len(directions) != 1:
        raise InvariantError(f"mixed elementary directions along t-word {t_word}")
    if abs(int(group.lengths[idx]) - start_len) != len(t_word):
        raise InvariantError("length change does not match the t-word length")
    result = silting_of(group.element(idx))
    if not result.is_tilting:
        raise InvariantError("tilting mutation left the tilting class")
    return result, directions.pop()


@dataclasses.dataclass(frozen=True)
class HasseQuiver:
    """Mutation quiver on two-term silting complexes (or on the tilting ones).

    Arrows run from larger to smaller in the silting order, i.e. from the
    degree-0 stalk complex down to its shift; the unique source is the
    identity element and the unique sink the longest element.
    """

    nodes: tuple[TwoTermSilting, ...]
    arrows: tuple[tuple[int, int, int], ...]   # (source pos, target pos, generator)
    restricted_to_tilting: bool

    def source_positions(self) -> list[int]:
        has_in = {t for _, t, _ in self.arrows}
        return [p for p in range(len(self.nodes)) if p not in has_in]

    def sink_positions(self) -> list[int]:
        has_out = {s for s, _, _ in self.arrows}
        return [p for p in range(len(self.nodes)) if p not in has_out]

    def degrees(self) -> list[int]:
        deg = [0] * len(self.nodes)
        for a, b, _ in self.arrows:
            deg[a] += 1
            deg[b] += 1
        return deg

    def to_dot(self) -> str:
        lines = ["digraph silting {"]
        for p, node in enumerate(self.nodes):
            shape = "box" if node.is_tilting else "ellipse"
            lines.append(f'  n{p} [label="{node}", shape={shape}];')
        for a, b, gen in self.arrows:
            lines.append(f'  n{a} -> n{b} [label="{gen}"];')
        lines.append("}")
        return "\n".join(lines)


def hasse(group: WeylGroup, restrict_tilting: bool = False,
          folded: Optional[FoldedGraph] = None) -> HasseQuiver:
    """Build the mutation quiver, optionally restricted to tilting complexes
    with arrows given by irreducible tilting mutation."""
    if folded is None:
        folded = fold(group.graph)
    order = [int(i) for i in group.canonical_order()]
    if restrict_tilting:
        keep = set(int(i) for i in group.iota_fixed_indices())
        order = [i for i in order if i in keep]
    pos = {idx: p for p, idx in enumerate(order)}
    nodes = tuple(silting_of(group.element(i)) for i in order)

    arrows = []
    if restrict_tilting:
        for p, idx in enumerate(order):
            for fi in range(1, folded.rank + 1):
                j = idx
                for letter in reversed(folded.t_words[fi - 1]):
                    j = group.act_left(letter, j)
                if group.lengths[j] > group.lengths[idx]:
                    arrows.append((p, pos[j], fi))
    else:
        for p, idx in enumerate(order):
            for i in range(1, group.graph.rank + 1):
                j = group.act_left(i, idx)
                if group.lengths[j] > group.lengths[idx]:
                    arrows.append((p, pos[j], i))
    return HasseQuiver(nodes=nodes, arrows=tuple(arrows), restricted_to_tilting=restrict_tilting)


def classification_json(group: WeylGroup) -> dict:
    """Full classification of two-term silting complexes as JSON data."""
    folded = fold(group.graph)
    fixed = set(int(i) for i in group.iota_fixed_indices())
    elements = []
    for idx in group.canonical_order():
        el = group.element(int(idx))
        record = el.to_json()
        record["tilting"] = int(idx) in fixed
        elements.append(record)
    return {
        "graph": group.graph.to_json(),
        "folded": {"family": folded.family, "rank": folded.rank},
        "counts": {"two_silt": group.order, "two_tilt": len(fixed)},
        "elements": elements,
    }


@dataclasses.dataclass(frozen=True)
class ClosureReport:
    """Outcome of the orbit/involution/faithfulness check of the folded
    generators acting on tilting complexes."""

    ok: bool
    orbit_size: int
    tilting_count: int
    expected_order: int
    closed: bool
    involutions_ok: bool
    transitive: bool
    faithful: bool
    messages: tuple[str, ...] = ()


def closure_check(group: WeylGroup, folded: Optional[FoldedGraph] = None) -> ClosureReport:
    """Verify that irreducible tilting mutation closes on, acts transitively
    on, and acts faithfully on the tilting complexes."""
    if folded is None:
        folded = fold(group.graph)
    messages: list[str] = []
    fixed = set(int(i) for i in group.iota_fixed_indices())
    expected = weyl_order(folded.family, folded.rank)

    def t_apply(fi: int, idx: int) -> int:
        for letter in reversed(folded.t_words[fi - 1]):
            idx = group.act_left(letter, idx)
        return idx

    closed = True
    involutions_ok = True
    for idx in fixed:
        for fi in range(1, folded.rank + 1):
            j = t_apply(fi, idx)
            if j not in fixed:
                closed = False
                messages.append(f"t{fi} leaves the tilting class at element {idx}")
            if t_apply(fi, j) != idx:
                involutions_ok = False
                messages.append(f"t{fi} is not an involution at element {idx}")

    orbit = {group.identity_index}
    frontier = [group.identity_index]
    while frontier:
        nxt = []
        for idx in frontier:
            for fi in range(1, folded.rank + 1):
                j = t_apply(fi, idx)
                if j not in orbit:
                    orbit.add(j)
                    nxt.append(j)
        frontier = nxt
    transitive = orbit == fixed
    if not transitive:
        messages.append(f"orbit of the identity has {len(orbit)} of {len(fixed)} tilting complexes")

    # The orbit of the base point is the image of the acting group; the
    # action sends u to S_u, so the base-point orbit has full group size
    # exactly when only the identity fixes the base point.  Together with
    # u . S_w = S_uw this makes the action faithful.
    faithful = len(orbit) == expected
    if not faithful:
        messages.append(f"orbit size {len(orbit)} != acting group order {expected}; "
                        "some nonidentity element fixes the base point")

    ok = closed and involutions_ok and transitive and faithful
    return ClosureReport(
        ok=ok,
        orbit_size=len(orbit),
        tilting_count=len(fixed),
        expected_order=expected,
        closed=closed,
        involutions_ok=involutions_ok,
        transitive=transitive,
        faithful=faithful,
        messages=tuple(messages),
    )
