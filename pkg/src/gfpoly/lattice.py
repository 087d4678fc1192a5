"""Integer-point enumeration of a dilated polytope, one coordinate at a time.

The caller supplies, for every prefix length ``j``, the facet inequalities of
the projection of the polytope onto its first ``j`` coordinates.  A partial
point ``x_1..x_{j-1}`` that lies in the previous projection then extends by
exactly the integer interval cut out by the level-``j`` inequalities, so the
partial points at depth ``j`` are precisely the lattice points of the
projection: no dead branches beyond integrality gaps.

Partial points are expanded in numpy blocks and processed depth-first so
memory stays bounded.  All arithmetic is int64 on small integers; magnitudes
are checked up front.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

_BLOCK_CELLS = 1 << 22
_SAFE = 1 << 60


def _check_magnitude(levels, n: int, radius: int) -> None:
    worst = 0
    for A, b in levels:
        if A.size:
            worst = max(worst, int(np.abs(A).sum(axis=1).max()) * radius + n * int(np.abs(b).max()))
    if worst >= _SAFE:
        raise OverflowError("enumeration data too large for the int64 kernel")


def _interval(A: np.ndarray, rhs: np.ndarray, X: np.ndarray):
    """Lower end and length of the admissible range of the next coordinate."""
    j = X.shape[1]
    col = A[:, j]
    pos = col > 0
    neg = col < 0
    slack = rhs[None, :] - X @ A[:, :j].T if j else np.broadcast_to(rhs, (X.shape[0], rhs.shape[0]))
    # every projection is bounded, so both sides are constrained
    upper = np.floor_divide(slack[:, pos], col[pos][None, :]).min(axis=1) if pos.any() else None
    lower = -np.floor_divide(slack[:, neg], -col[neg][None, :]).min(axis=1) if neg.any() else None
    if upper is None or lower is None:
        raise ValueError("projection is unbounded; polytope data is inconsistent")
    cnt = upper - lower + 1
    zero = ~(pos | neg)
    if zero.any():
        # implied by the previous level unless the right-hand side was tightened
        cnt[(slack[:, zero] < 0).any(axis=1)] = 0
    np.maximum(cnt, 0, out=cnt)
    return lower, cnt


def scan(levels: Sequence[tuple[np.ndarray, np.ndarray]], n: int, strict: bool = False,
         count_only: bool = False, radius: int = 1):
    """Integer points of ``n`` times the polytope described by ``levels``.

    ``levels[j]`` is ``(A, b)`` for the projection onto the first ``j + 1``
    coordinates, i.e. ``{y : A y <= b}``.  With ``strict`` the last level's
    inequalities are made strict (interior points).  ``radius`` bounds the
    absolute value of every coordinate of the undilated polytope.
    Returns a count, or a lexicographically sorted ``(N, m)`` int64 array.
    """
    m = len(levels)
    levels = [(np.asarray(A, dtype=np.int64), np.asarray(b, dtype=np.int64)) for A, b in levels]
    _check_magnitude(levels, n, n * radius)
    rhs = [n * b for _, b in levels]
    if strict:
        rhs[-1] = rhs[-1] - 1
    total = 0
    pieces = []
    stack = [np.zeros((1, 0), dtype=np.int64)]
    while stack:
        X = stack.pop()
        j = X.shape[1]
        A = levels[j][0]
        lower, cnt = _interval(A, rhs[j], X)
        if j == m - 1 and count_only:
            total += int(cnt.sum())
            continue
        keep = cnt > 0
        if not keep.all():
            X, lower, cnt = X[keep], lower[keep], cnt[keep]
        if not cnt.shape[0]:
            continue
        parent = np.repeat(np.arange(cnt.shape[0]), cnt)
        start = np.repeat(np.cumsum(cnt) - cnt, cnt)
        values = lower[parent] + (np.arange(parent.shape[0]) - start)
        Xn = np.concatenate([X[parent], values[:, None]], axis=1)
        if j == m - 1:
            pieces.append(Xn)
            continue
        block = max(64, _BLOCK_CELLS // max(levels[j + 1][0].shape[0], 1))
        for s in range(0, Xn.shape[0], block):
            stack.append(Xn[s:s + block])
    if count_only:
        return total
    if not pieces:
        return np.zeros((0, m), dtype=np.int64)
    out = np.concatenate(pieces, axis=0)
    return out[np.lexsort(out.T[::-1])]
