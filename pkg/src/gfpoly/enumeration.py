"""Exhaustive lists of small posets and of poset pairs up to simultaneous relabeling."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .posets import Poset


def _permute_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if mask >> i & 1:
            out |= 1 << p
    return out


def permute(P: Poset, perm: tuple[int, ...]) -> Poset:
    """Relabel with the 0-based map ``i -> perm[i]``."""
    down = [0] * P.d
    for i, m in enumerate(P.down):
        down[perm[i]] = _permute_mask(m, perm)
    return Poset(P.d, tuple(down))


@lru_cache(maxsize=None)
def naturally_labeled_posets(d: int) -> tuple[Poset, ...]:
    """Posets on ``1..d`` in which ``p_i < p_j`` implies ``i < j``.

    The top label of such a poset is maximal and sits over an arbitrary ideal
    of the rest, which gives the recursion.
    """
    if d == 0:
        return (Poset(0, ()),)
    out = []
    for P in naturally_labeled_posets(d - 1):
        for ideal in P.ideal_masks:
            out.append(Poset(d, P.down + (ideal | 1 << (d - 1),)))
    return tuple(out)


@lru_cache(maxsize=None)
def labeled_posets(d: int) -> tuple[Poset, ...]:
    """Every partial order on ``1..d`` (1, 3, 19, 219, 4231 for d = 1..5)."""
    seen = {}
    for P in naturally_labeled_posets(d):
        for perm in itertools.permutations(range(d)):
            R = permute(P, perm)
            seen.setdefault(R.down, R)
    return tuple(seen[k] for k in sorted(seen))


def _canonical(P: Poset) -> tuple[int, ...]:
    return min(permute(P, perm).down for perm in itertools.permutations(range(P.d)))


@lru_cache(maxsize=None)
def unlabeled_posets(d: int) -> tuple[Poset, ...]:
    """One representative per isomorphism class (1, 2, 5, 16, 63, 318 for d = 1..6)."""
    reps = {}
    for P in naturally_labeled_posets(d):
        reps.setdefault(_canonical(P), P)
    return tuple(Poset(d, k) for k in sorted(reps))


def _stabilizer(P: Poset) -> list[tuple[int, ...]]:
    return [perm for perm in itertools.permutations(range(P.d)) if permute(P, perm).down == P.down]


@lru_cache(maxsize=None)
def poset_pairs(d: int) -> tuple[tuple[Poset, Poset], ...]:
    """Pairs of posets on ``1..d`` modulo relabeling both by the same permutation.

    Relabeling both posets permutes coordinates of every polytope built from
    the pair, so one pair per orbit covers all cases.
    """
    out = []
    everything = labeled_posets(d)
    for P in unlabeled_posets(d):
        stab = _stabilizer(P)
        seen = set()
        for Q in everything:
            key = min(permute(Q, s).down for s in stab)
            if key not in seen:
                seen.add(key)
                out.append((P, Poset(d, key)))
    return tuple(out)
