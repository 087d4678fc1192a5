"""Named posets and polytopes from the worked examples, transcribed from Hasse diagrams."""

from __future__ import annotations

from .posets import Poset, adjoin_bottom, from_cover_relations

# p1, p2 at the bottom, p3, p4 in the middle, p5, p6 on top; every element of
# a level covers both elements of the level below.
SIX_ELEMENT_COVERS = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (3, 6), (4, 5), (4, 6)]

# p7 inserted between the bottom pair and the middle pair.
P1_COVERS = [(1, 7), (2, 7), (7, 3), (7, 4), (3, 5), (3, 6), (4, 5), (4, 6)]

# p7 inserted between the middle pair and the top pair.
P2_COVERS = [(1, 3), (1, 4), (2, 3), (2, 4), (3, 7), (4, 7), (7, 5), (7, 6)]

# p7 on top of the six-element poset.
P3_COVERS = SIX_ELEMENT_COVERS + [(5, 7), (6, 7)]


def six_element_poset() -> Poset:
    return from_cover_relations(6, SIX_ELEMENT_COVERS)


def six_element_poset_bottomed() -> Poset:
    """The six-element poset with ``p7`` adjoined below everything."""
    return adjoin_bottom(six_element_poset())


def seven_element_posets() -> dict[str, Poset]:
    return {
        "P1": from_cover_relations(7, P1_COVERS),
        "P2": from_cover_relations(7, P2_COVERS),
        "P3": from_cover_relations(7, P3_COVERS),
    }


def _e(*idx: int, d: int = 9) -> tuple[int, ...]:
    v = [0] * d
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


# 0/1 polytope of dimension 9 with 15 vertices whose doubled omega is not normal.
NONNORMAL_BASE_VERTICES = [
    _e(1, 2), _e(2, 3), _e(3, 4), _e(4, 5), _e(1, 5),
    _e(1, 6), _e(1, 7), _e(2, 7), _e(2, 8), _e(3, 8),
    _e(3, 9), _e(4, 9), _e(4), _e(5), _e(5, 6),
]


def simplex_vertices(d: int) -> list[tuple[int, ...]]:
    """``e_1, ..., e_d, -(e_1 + ... + e_d)``."""
    out = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    out.append(tuple(-1 for _ in range(d)))
    return out
