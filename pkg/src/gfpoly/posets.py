"""Finite posets on the labels 1..d and the order-theoretic counts built on them.

Internally an element with label ``i`` is bit ``i - 1`` of a Python int, and a
poset stores for every element the bitmask of the elements below or equal to
it.  Subsets handed across the public API are ``frozenset`` of labels.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CycleDetected, DimensionMismatch, NotAnIdeal

IndexSet = frozenset


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def canonical_key(s: Iterable[int]) -> tuple:
    """Sort key for index sets: cardinality, then the characteristic vector lexicographically.

    Among sets of equal size the one containing the smallest label of the
    symmetric difference has the larger characteristic vector, so negated
    sorted members give the same order without knowing ``d``.
    """
    t = tuple(sorted(s))
    return (len(t), tuple(-i for i in t))


@dataclass(frozen=True)
class Poset:
    """A partial order on ``{1, ..., d}``, stored transitively closed.

    ``down[i - 1]`` is the bitmask of all ``j`` with ``p_j <= p_i``.
    """

    d: int
    down: tuple[int, ...]

    def __post_init__(self):
        if self.d < 0 or len(self.down) != self.d:
            raise ValueError("down-set table must have one entry per element")
        for i in range(self.d):
            di = self.down[i]
            if not di >> i & 1:
                raise ValueError(f"relation is not reflexive at {i + 1}")
            for j in range(self.d):
                if j != i and di >> j & 1:
                    if self.down[j] >> i & 1:
                        raise CycleDetected(f"p{i + 1} <= p{j + 1} <= p{i + 1}")
                    if self.down[j] & ~di:
                        raise ValueError("relation is not transitive")

    # -- queries ---------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        """``p_i <= p_j``."""
        return bool(self.down[j - 1] >> (i - 1) & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    @cached_property
    def up(self) -> tuple[int, ...]:
        ups = [0] * self.d
        for j in range(self.d):
            m = self.down[j]
            for i in range(self.d):
                if m >> i & 1:
                    ups[i] |= 1 << j
        return tuple(ups)

    @property
    def full_mask(self) -> int:
        return (1 << self.d) - 1

    def relations(self) -> list[tuple[int, int]]:
        """All strict relations ``(i, j)`` with ``p_i < p_j``."""
        return [
            (i, j)
            for j in range(1, self.d + 1)
            for i in range(1, self.d + 1)
            if i != j and self.leq(i, j)
        ]

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations, recomputed from the closure."""
        out = []
        for i, j in self.relations():
            between = self.up[i - 1] & self.down[j - 1] & ~(1 << (i - 1)) & ~(1 << (j - 1))
            if not between:
                out.append((i, j))
        return sorted(out)

    def is_ideal_mask(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            if self.down[low.bit_length() - 1] & ~mask:
                return False
            m ^= low
        return True

    def max_mask(self, mask: int) -> int:
        """Maximal elements of an arbitrary subset given as a mask."""
        out = 0
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if not (self.up[i] & mask & ~low):
                out |= low
            m ^= low
        return out

    def downset_mask(self, mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= self.down[low.bit_length() - 1]
            m ^= low
        return out

    @cached_property
    def ideal_masks(self) -> tuple[int, ...]:
        """All poset ideals as masks, in canonical order."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                rest = self.full_mask & ~ideal
                m = rest
                while m:
                    low = m & -m
                    # an element can be added once everything below it is present
                    if not (self.down[low.bit_length() - 1] & ~ideal & ~low):
                        new = ideal | low
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
                    m ^= low
            frontier = nxt
        return tuple(sorted(seen, key=lambda s: canonical_key(members_of(s))))

    def __repr__(self) -> str:
        return f"Poset(d={self.d}, covers={self.covers()})"


# -- construction ---------------------------------------------------------


def from_cover_relations(d: int, covers: Iterable[Sequence[int]]) -> Poset:
    """Transitive closure of ``p_i < p_j`` for every pair ``(i, j)`` in ``covers``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    down = [1 << i for i in range(d)]
    for pair in covers:
        i, j = int(pair[0]), int(pair[1])
        if not (1 <= i <= d and 1 <= j <= d):
            raise ValueError(f"relation ({i}, {j}) outside 1..{d}")
        if i == j:
            raise CycleDetected(f"p{i} < p{i}")
        down[j - 1] |= 1 << (i - 1)
    # Warshall closure on bitmasks
    for k in range(d):
        bit = 1 << k
        dk = down[k]
        for j in range(d):
            if down[j] & bit:
                down[j] |= dk
    for i in range(d):
        for j in range(i + 1, d):
            if down[j] >> i & 1 and down[i] >> j & 1:
                raise CycleDetected(f"p{i + 1} <= p{j + 1} <= p{i + 1}")
    return Poset(d, tuple(down))


def chain(d: int) -> Poset:
    return from_cover_relations(d, [(i, i + 1) for i in range(1, d)])


def antichain(d: int) -> Poset:
    return from_cover_relations(d, [])


# -- ideals and antichains -------------------------------------------------


def ideals(P: Poset) -> list[frozenset[int]]:
    return [members_of(m) for m in P.ideal_masks]


def antichain_masks(P: Poset) -> list[int]:
    return sorted((P.max_mask(m) for m in P.ideal_masks), key=lambda s: canonical_key(members_of(s)))


def antichains(P: Poset) -> list[frozenset[int]]:
    return [members_of(m) for m in antichain_masks(P)]


def _checked_ideal(P: Poset, I: Iterable[int]) -> int:
    mask = mask_of(I)
    if mask & ~P.full_mask:
        raise NotAnIdeal(f"{sorted(I)} is not a subset of 1..{P.d}")
    if not P.is_ideal_mask(mask):
        raise NotAnIdeal(f"{sorted(I)} is not downward closed")
    return mask


def max_elements(P: Poset, I: Iterable[int]) -> frozenset[int]:
    return members_of(P.max_mask(_checked_ideal(P, I)))


def star_mask(P: Poset, a: int, b: int) -> int:
    """Mask form of :func:`ideal_star` (no validation)."""
    gens = P.max_mask(a & b) & (P.max_mask(a) | P.max_mask(b))
    return P.downset_mask(gens)


def ideal_star(P: Poset, I: Iterable[int], I2: Iterable[int]) -> frozenset[int]:
    """Ideal generated by ``max(I & I2) & (max(I) | max(I2))``."""
    a = _checked_ideal(P, I)
    b = _checked_ideal(P, I2)
    return members_of(star_mask(P, a, b))


def linear_extension_count(P: Poset) -> int:
    """Number of linear extensions, as maximal chains of the ideal lattice."""
    ways = {0: 1}
    for ideal in P.ideal_masks[1:]:
        total = 0
        m = P.max_mask(ideal)
        while m:
            low = m & -m
            total += ways[ideal ^ low]
            m ^= low
        ways[ideal] = total
    return ways[P.full_mask]


def has_common_linear_extension(P: Poset, Q: Poset) -> bool:
    if P.d != Q.d:
        raise DimensionMismatch(f"|P| = {P.d} but |Q| = {Q.d}")
    graph: dict[int, set[int]] = {i: set() for i in range(1, P.d + 1)}
    for i, j in P.relations() + Q.relations():
        graph[j].add(i)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError:
        return False
    return True


# -- derived posets --------------------------------------------------------


def ordinal_sum(P: Poset, Q: Poset) -> Poset:
    """``P`` below ``Q``; ``Q``'s labels are shifted by ``P.d``."""
    shift = P.d
    down = list(P.down)
    for j in range(Q.d):
        down.append(P.full_mask | (Q.down[j] << shift))
    return Poset(P.d + Q.d, tuple(down))


def adjoin_bottom(P: Poset) -> Poset:
    """``{p_{d+1}} (+) P``: a new element labelled ``d + 1`` below everything."""
    bottom = 1 << P.d
    down = tuple(m | bottom for m in P.down) + (bottom,)
    return Poset(P.d + 1, down)


def induced_subposet(P: Poset, W: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Restriction of ``P`` to ``W``, relabelled ``1..|W|``.

    Returns the poset and the label map: new label ``k`` is old label ``labels[k - 1]``.
    """
    labels = tuple(sorted(set(W)))
    if any(not 1 <= w <= P.d for w in labels):
        raise ValueError(f"W must be a subset of 1..{P.d}")
    covers = [
        (a + 1, b + 1)
        for a, i in enumerate(labels)
        for b, j in enumerate(labels)
        if i != j and P.leq(i, j)
    ]
    return from_cover_relations(len(labels), covers), labels


def delta_W(P: Poset, Q: Poset, W: Iterable[int]) -> Poset:
    """``P_W (+) Q_{[d] - W}`` keeping the shared labels of ``P`` and ``Q``.

    Element ``i`` plays the role of ``p_i`` when ``i`` is in ``W`` and of ``q_i``
    otherwise.
    """
    if P.d != Q.d:
        raise DimensionMismatch(f"|P| = {P.d} but |Q| = {Q.d}")
    wmask = mask_of(W)
    if wmask & ~P.full_mask:
        raise ValueError(f"W must be a subset of 1..{P.d}")
    comp = P.full_mask & ~wmask
    down = []
    for i in range(P.d):
        if wmask >> i & 1:
            down.append(P.down[i] & wmask)
        else:
            down.append((Q.down[i] & comp) | wmask)
    return Poset(P.d, tuple(down))


def relabel(P: Poset, perm: Sequence[int]) -> Poset:
    """Image of ``P`` under the label map ``i -> perm[i - 1]``."""
    return from_cover_relations(P.d, [(perm[i - 1], perm[j - 1]) for i, j in P.covers()])
