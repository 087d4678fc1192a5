"""Exact double-description kernel: facets and vertices of integer point sets.

Facets of ``conv(points)`` are the extreme rays of the homogenised cone
``{(b, a) : b + <a, v> >= 0 for every point v}``.  Rays are kept as primitive
integer vectors and incidences as bitmasks over the input points, so the
whole computation stays in exact integer arithmetic.
"""

from __future__ import annotations

import logging
from typing import Sequence

from .intlinalg import Vector, dot, independent_rows, inverse, primitive

log = logging.getLogger(__name__)


def _initial_rays(rows: Sequence[Vector], basis: list[int]) -> list[tuple[Vector, int]]:
    inv = inverse([rows[i] for i in basis])
    k = len(basis)
    all_bits = 0
    for i in basis:
        all_bits |= 1 << i
    rays = []
    for j in range(k):
        col = [inv[r][j] for r in range(k)]
        den = 1
        for x in col:
            den = den * x.denominator // _gcd(den, x.denominator)
        ray = primitive([int(x * den) for x in col])
        rays.append((ray, all_bits & ~(1 << basis[j])))
    return rays


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def extreme_rays(rows: Sequence[Vector]) -> list[tuple[Vector, int]]:
    """Extreme rays of the pointed cone ``{y : <r, y> >= 0 for r in rows}``.

    Returns ``(ray, zero_mask)`` pairs where bit ``i`` of ``zero_mask`` is set iff
    ``<rows[i], ray> == 0``.  ``rows`` must span the ambient space.
    """
    k = len(rows[0])
    basis = independent_rows(rows)
    if len(basis) != k:
        raise ValueError("constraint rows do not span; cone is not pointed")
    rays = _initial_rays(rows, basis)
    in_basis = set(basis)
    need = k - 2
    for t, row in enumerate(rows):
        if t in in_basis:
            continue
        bit = 1 << t
        pos, zero, neg = [], [], []
        for ray, z in rays:
            s = dot(row, ray)
            if s > 0:
                pos.append((ray, z, s))
            elif s < 0:
                neg.append((ray, z, s))
            else:
                zero.append((ray, z | bit))
        if not neg:
            rays = [(r, z) for r, z, _ in pos] + zero
            continue
        masks = [z for _, z in rays]
        new = []
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                common = zp & zn
                if common.bit_count() < need:
                    continue
                # distinct extreme rays have distinct zero sets
                if any(not (common & ~zw) and zw != zp and zw != zn for zw in masks):
                    continue
                ray = primitive([sp * yn - sn * yp for yp, yn in zip(rp, rn)])
                new.append((ray, common | bit))
        rays = [(r, z) for r, z, _ in pos] + zero + new
    return rays


def facets_of_points(points: Sequence[Vector]) -> list[tuple[Vector, int, int]]:
    """Facets of the full-dimensional hull of distinct integer ``points``.

    Each facet is ``(normal, offset, point_mask)`` with primitive ``normal``,
    the polytope lying in ``<normal, x> <= offset`` and ``point_mask`` marking
    the input points on the facet.
    """
    rows = [(1,) + tuple(p) for p in points]
    out = []
    for ray, z in extreme_rays(rows):
        b, a = ray[0], ray[1:]
        out.append((tuple(-x for x in a), b, z))
    return out


def vertex_indices(n_points: int, facets: Sequence[tuple[Vector, int, int]]) -> list[int]:
    """Indices of the input points that are vertices.

    A point is a vertex iff the intersection of the facets through it contains
    no other input point (every face of positive dimension holds two vertices).
    """
    full = (1 << n_points) - 1
    out = []
    for i in range(n_points):
        bit = 1 << i
        face = full
        for _, _, mask in facets:
            if mask & bit:
                face &= mask
        if face == bit:
            out.append(i)
    return out
